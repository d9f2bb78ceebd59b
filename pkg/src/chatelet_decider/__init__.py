"""Rationality decider for Chatelet surfaces over Q."""
