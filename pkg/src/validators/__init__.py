"""
Validators for chain decompositions and benchmark records.
"""

from .chain_validator import ChainValidator
from .schema_validator import SchemaValidator

__all__ = ['ChainValidator', 'SchemaValidator']
