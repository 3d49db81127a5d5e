"""Test suite for cremona-locus."""
