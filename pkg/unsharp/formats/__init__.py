"""Input file formats, expressions and rendering."""
