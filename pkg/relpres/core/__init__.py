"""Core module containing domain models, exceptions and file formats."""
