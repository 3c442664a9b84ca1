"""
JSON Schema validation of benchmark records.
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from jsonschema import Draft7Validator

logger = logging.getLogger(__name__)


class SchemaValidator:
    """
    Checks benchmark rows against the JSON schemas under schemas/.

    Compiled validators are cached per schema name.
    """

    def __init__(self, schema_dir: Optional[Union[str, Path]] = None):
        self.schema_dir = Path(schema_dir) if schema_dir is not None else Path(__file__).resolve().parents[2] / "schemas"
        self._validators: Dict[str, Draft7Validator] = {}

    def _load_schema(self, schema_name: str) -> Dict[str, Any]:
        schema_path = self.schema_dir / f"{schema_name}.schema.json"
        if not schema_path.exists():
            raise FileNotFoundError(f"Schema file not found: {schema_path}")
        return json.loads(schema_path.read_text(encoding="utf-8"))

    def _validator(self, schema_name: str) -> Draft7Validator:
        if schema_name not in self._validators:
            self._validators[schema_name] = Draft7Validator(self._load_schema(schema_name))
        return self._validators[schema_name]

    def get_validation_errors(self, data: Dict[str, Any], schema_name: str) -> List[str]:
        """Every violation as "field: message", ordered by field path; empty when valid."""
        try:
            validator = self._validator(schema_name)
        except FileNotFoundError as e:
            return [f"Schema not found: {e}"]
        errors = sorted(validator.iter_errors(data), key=lambda e: list(e.path))
        return [f"{'/'.join(map(str, e.path)) or '<root>'}: {e.message}" for e in errors]

    def validate_bench_record(self, record: Dict[str, Any]) -> bool:
        """
        Validate one benchmark row against the bench_record schema.

        Args:
            record: Row as a column -> value mapping

        Returns:
            True if valid, False otherwise
        """
        errors = self.get_validation_errors(record, "bench_record")
        for error in errors:
            logger.error(f"Benchmark record validation error: {error}")
        return not errors
