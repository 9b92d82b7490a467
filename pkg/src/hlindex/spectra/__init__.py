"""Float and exact eigenvalue engines."""
