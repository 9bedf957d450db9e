"""Tests for evaluation"""
