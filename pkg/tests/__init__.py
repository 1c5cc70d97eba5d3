"""Test suite for braidcalc."""
