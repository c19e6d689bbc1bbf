""" Enum for artifact file formats """
from enum import Enum


class ArtifactFormat(Enum):
    """ Each format defined by its file extension """
    OBJ = "obj"
    CSV = "csv"
    JSON = "json"

    @classmethod
    def from_path(cls, path: str) -> "ArtifactFormat":
        """ Pick the format matching a file extension, JSON when unknown """
        suffix = path.rsplit(".", 1)[-1].lower() if "." in path else ""
        for fmt in cls:
            if fmt.value == suffix:
                return fmt
        return cls.JSON
