"""Tests for tasks"""
