"""
Contains the RunConfig class holding one validated command line
"""
from dataclasses import dataclass, field
from typing import Optional
from _errors.errors import DegenerateInitialHeight, InvalidParameter
from _profile.model_params import ModelParams

# flags that are not numerical settings
_SKIP = {"command", "verbose", "func"}


@dataclass
class RunConfig:
    """
    Subcommand with every effective flag, validated before any computation

    Attributes:
        command: Subcommand name
        flags: Flag name mapped to its effective value
        params: Model parameters built from c0 and the tolerance overrides
    """
    command: str
    flags: dict = field(default_factory=dict)
    params: Optional[ModelParams] = None

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        """
        Build and validate from parsed arguments

        Args:
            args: argparse namespace
        Returns:
            RunConfig
        Raises:
            ValidationError: a flag is outside its domain
        """
        flags = {key: value for key, value in sorted(vars(args).items()) if key not in _SKIP}
        if flags.get("z0") == 0:
            raise DegenerateInitialHeight("--z0 must be nonzero")
        if flags.get("count") is not None and flags["count"] < 1:
            raise InvalidParameter("--count must be at least 1")
        if flags.get("samples") is not None and flags["samples"] < 2:
            raise InvalidParameter("--samples must be at least 2")
        params = None
        if flags.get("c0") is not None:
            params = ModelParams(c0=flags["c0"], abs_tol=flags["abs_tol"],
                                 rel_tol=flags["rel_tol"], sigma0=flags["sigma0"],
                                 z_cutoff_factor=flags["z_cutoff"],
                                 sigma_max=flags["sigma_max"], root_tol=flags["root_tol"])
        return cls(args.command, flags, params)

    def to_dict(self) -> dict:
        """ Config block of every JSON output """
        block = {"command": self.command, "flags": self.flags}
        if self.params is not None:
            block["params"] = self.params.to_dict()
        return block
