"""Raw test data."""
