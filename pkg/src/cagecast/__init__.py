"""cagecast: live round-score and fight-winner prediction for 3-round MMA bouts."""

__version__ = "0.1.0"
