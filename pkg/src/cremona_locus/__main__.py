"""Allow `python -m cremona_locus`."""

from .cli import run

run()
