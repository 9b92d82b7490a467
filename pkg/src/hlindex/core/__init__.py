"""Graph values, codecs and structural predicates."""
