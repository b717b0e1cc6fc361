"""Chart rendering for sweep result CSVs; depends only on the CSV format."""
