"""Tests for np-region."""
