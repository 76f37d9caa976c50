"""
Verification scripts for the link simulator
"""
