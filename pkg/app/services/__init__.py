"""
Services package for the Hypertrans application.
Contains benchmark persistence on top of the database layer.
"""
