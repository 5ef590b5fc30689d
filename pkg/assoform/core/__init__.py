"""Scalars, forms, exact linear algebra and text formats."""
