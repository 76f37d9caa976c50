"""
Result comparison scripts for throughput curves
"""
