"""Alice/Bob secure sampling protocol."""
