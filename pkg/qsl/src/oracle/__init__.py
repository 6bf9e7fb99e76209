"""Classical-quantum hybrid oracle."""
