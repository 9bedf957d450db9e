"""Tests for lp"""
