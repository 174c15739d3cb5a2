"""CLI interface"""
