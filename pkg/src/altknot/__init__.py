"""Alternating knot diagrams: Gauss codes, interlacement graphs, flypes and invariants."""
