"""Unit test package for pylogharmonic."""
