"""Simplicity analysis for C*-algebras of finite labeled graphs."""
