"""Tests for solvers"""
