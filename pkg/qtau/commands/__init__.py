"""Command cogs, discovered by QTau.load_extensions."""
