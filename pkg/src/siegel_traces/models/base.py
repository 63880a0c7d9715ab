# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
from typing import Annotated, Any

from pydantic import BaseModel, BeforeValidator, ConfigDict, PlainSerializer, model_validator


def _parse_decimal(value: Any) -> Any:
    if isinstance(value, str):
        return int(value.strip())
    return value


# Exact integers travel as decimal strings in every file we write.
DecimalInt = Annotated[
    int,
    BeforeValidator(_parse_decimal),
    PlainSerializer(lambda v: str(v), return_type=str, when_used="json"),
]


class BaseExactModel(BaseModel):
    """
    A base model for everything siegel-traces writes to disk.
    - Converts numpy scalars and tuples to plain Python values.
    - Ignores unknown keys so older files stay readable.
    """
    model_config = ConfigDict(
        from_attributes=True,
        extra='ignore',
    )

    @model_validator(mode='before')
    @classmethod
    def _convert_numpy_types(cls, data: Any) -> Any:
        """
        Runs before any other validation.
        Replaces numpy scalars with Python ints and tuples with lists.
        """
        if isinstance(data, dict):
            for key, value in data.items():
                if hasattr(value, 'item') and not isinstance(value, (list, dict)):
                    data[key] = value.item()
                elif isinstance(value, tuple):
                    data[key] = list(value)
        return data
