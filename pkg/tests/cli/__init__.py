"""Tests for cli"""
