"""Singularity classes and strata degrees on Hurwitz spaces."""
