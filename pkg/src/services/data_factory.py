"""Factory for loading algebraic input data from JSON files."""

import json
import logging
from pathlib import Path
from typing import Any, List, Tuple, Union

from ..core.errors import InputFormatError
from ..core.free_algebra import FreeElement
from ..core.lie import LieAlgebra, LieBialgebra, Representation
from ..core.tensor_ops import RMatrix
from . import serializers

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


class DataFactory:
    """Resolves input files and decodes them into core objects."""

    def __init__(self, data_dir: str = "src/data") -> None:
        """Initialize the factory.

        Args:
            data_dir: Directory searched for names that are not existing paths
        """
        self.data_dir = Path(data_dir)

    def resolve(self, name: PathLike) -> Path:
        """Return name itself if it exists, else name under the data directory.

        Raises:
            InputFormatError: If neither location holds a file
        """
        path = Path(name)
        if path.is_file():
            return path
        candidate = self.data_dir / path
        if candidate.is_file():
            return candidate
        if candidate.with_suffix(".json").is_file():
            return candidate.with_suffix(".json")
        raise InputFormatError(f"no such data file: {name}")

    def load_json(self, name: PathLike) -> Any:
        path = self.resolve(name)
        try:
            with open(path) as f:
                data = json.load(f)
        except json.JSONDecodeError as exc:
            raise InputFormatError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
        logger.info("loaded %s", path)
        return data

    def load_rmatrix(self, name: PathLike) -> RMatrix:
        return serializers.rmatrix_from_json(self.load_json(name))

    def load_cartan(self, name: PathLike) -> Tuple[List[List[int]], List[int]]:
        return serializers.cartan_from_json(self.load_json(name))

    def load_lie_bialgebra(self, name: PathLike) -> LieBialgebra:
        return serializers.lie_bialgebra_from_json(self.load_json(name))

    def load_representation(self, name: PathLike, algebra: LieAlgebra) -> Representation:
        return serializers.representation_from_json(self.load_json(name), algebra)

    def load_element(self, name: PathLike) -> FreeElement:
        return serializers.element_from_json(self.load_json(name))
