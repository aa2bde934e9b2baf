"""Tests for the Carter linkage toolkit."""
