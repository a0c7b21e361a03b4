# Utility functions and helpers 