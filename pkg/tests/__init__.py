"""zomatch test suite."""
