"""Tests for affinity"""
