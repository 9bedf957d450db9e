"""Tests for schedule"""
