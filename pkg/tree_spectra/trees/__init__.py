"""Tree data model, construction and generation."""
