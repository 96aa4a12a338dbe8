"""CY4Vertex run configuration

A RunConfig is assembled from command flags, an optional YAML file
(`--config run.yaml`) and the environment loaded by `cy4vertex.settings`.
Flags win over the file, the file wins over the environment, the
environment wins over built-in defaults.

The YAML file holds top-level keys shared by every command and optional
`vertex`, `verify` and `global` sections overriding them per command.

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from fractions import Fraction
from typing import Mapping, NamedTuple
import os
import re

import yaml

from cy4vertex import settings
from cy4vertex.errors import InputError
from cy4vertex.vertex_series import SignAssignment


#####################################################################
# Constants

COMMANDS = ("vertex", "verify", "global")

# Sign modes by name; anything else must be the path of an explicit sign file.
SIGN_MODES = ("formula0", "formula2", "search", "support")

FIELDS = (
    "spec", "kind", "order", "signs", "jobs", "golden_dir", "name", "case", "confirm", "search_budget",
    "degree", "m_min", "m_max", "n_min", "n_max", "bundle", "specialize", "cocharacter", "seed",
)


#####################################################################
# Internal helper

def _defaults(command: str) -> dict:
    return {
        "spec": None,
        "kind": "pt1" if command == "global" else "dt",
        "order": None,
        "signs": None,
        "jobs": settings.CY4VERTEX_JOBS,
        "golden_dir": None,
        "name": None,
        "case": None,
        "confirm": "exact",
        "search_budget": settings.CY4VERTEX_SEARCH_BUDGET,
        "degree": 0,
        "m_min": 0,
        "m_max": None,
        "n_min": 0,
        "n_max": 3,
        "bundle": None,
        "specialize": True,
        "cocharacter": None,
        "seed": None,
    }


def _read_yaml(path: str, command: str) -> dict:
    """
    Raises:
        InputError: unreadable file, not a mapping, or unknown keys.
    """
    try:
        with open(path) as fp:
            data = yaml.safe_load(fp) or {}
    except (OSError, yaml.YAMLError) as err:
        raise InputError(f"Cannot read config file {path}: {err}") from err
    if not isinstance(data, dict):
        raise InputError(f"Config file {path} must hold a mapping")
    values = {k: v for k, v in data.items() if k not in COMMANDS}
    section = data.get(command) or {}
    if not isinstance(section, dict):
        raise InputError(f"Config section '{command}' in {path} must be a mapping")
    values.update(section)
    values = {k.replace("-", "_"): v for k, v in values.items()}
    unknown = sorted(set(values) - set(FIELDS))
    if unknown:
        raise InputError(f"Unknown config keys in {path}: {', '.join(unknown)}")
    return values


def _slug(text: str) -> str:
    return re.sub(r"[^A-Za-z0-9]+", "-", text).strip("-").lower()


def load_signs(path: str) -> SignAssignment:
    """Explicit signs from a YAML or JSON file: a list of records or an ident -> sign mapping.

    Raises:
        InputError: the file cannot be read or holds something else.
    """
    try:
        with open(path) as fp:
            data = yaml.safe_load(fp)
    except (OSError, yaml.YAMLError) as err:
        raise InputError(f"Cannot read sign file {path}: {err}") from err
    if isinstance(data, Mapping):
        data = data.get("signs", data)
    if isinstance(data, Mapping):
        try:
            return SignAssignment({str(k): int(v) for k, v in data.items()})
        except (TypeError, ValueError) as err:
            raise InputError(f"Sign file {path} must map fixed points to +1 or -1") from err
    if isinstance(data, list):
        return SignAssignment.from_records(data)
    raise InputError(f"Sign file {path} must hold sign records or a mapping")


#####################################################################
# RunConfig

class RunConfig(NamedTuple):
    command: str
    spec: str
    kind: str
    order: int
    signs: str
    jobs: int
    golden_dir: str
    name: str
    case: str
    confirm: str
    search_budget: int
    degree: int
    m_min: Fraction
    m_max: Fraction
    n_min: int
    n_max: int
    bundle: str
    specialize: bool
    cocharacter: tuple
    seed: int

    @classmethod
    def resolve(cls, command: str, flags: Mapping = None, path: str = None) -> "RunConfig":
        """Merge flags over the YAML file over the environment defaults.

        Flags that are None count as not given.

        Raises:
            InputError: unknown command or key, or a value out of range.
        """
        if command not in COMMANDS:
            raise InputError(f"Unknown command '{command}', expected one of {COMMANDS}")
        values = _defaults(command)
        if path:
            values.update(_read_yaml(path, command))
        for key, value in (flags or {}).items():
            key = key.replace("-", "_")
            if key not in FIELDS:
                raise InputError(f"Unknown option '{key}'")
            if value is not None:
                values[key] = value
        return cls._validated(command, values)

    @classmethod
    def _validated(cls, command: str, values: dict) -> "RunConfig":
        try:
            for key in ("order", "jobs", "search_budget", "degree", "n_min", "n_max", "seed"):
                if values[key] is not None:
                    values[key] = int(values[key])
            for key in ("m_min", "m_max"):
                if values[key] is not None:
                    values[key] = Fraction(str(values[key]))
            if values["cocharacter"] is not None:
                text = values["cocharacter"]
                parts = text.split(",") if isinstance(text, str) else text
                values["cocharacter"] = tuple(int(x) for x in parts)
        except (TypeError, ValueError) as err:
            raise InputError(f"Malformed option value: {err}") from err
        if isinstance(values["spec"], (list, tuple)):
            values["spec"] = " ".join(str(x) for x in values["spec"]) or None
        values["kind"] = str(values["kind"]).lower()
        values["specialize"] = bool(values["specialize"])

        if values["order"] is not None and values["order"] < 0:
            raise InputError(f"Order must be nonnegative, got {values['order']}")
        if values["jobs"] < 1:
            raise InputError(f"Parallelism degree must be positive, got {values['jobs']}")
        if values["degree"] < 0:
            raise InputError(f"Surface degree must be nonnegative, got {values['degree']}")
        signs = values["signs"]
        if signs is not None and signs not in SIGN_MODES and not os.path.isfile(str(signs)):
            raise InputError(f"Sign mode must be one of {SIGN_MODES} or an existing sign file, got '{signs}'")
        if values["cocharacter"] is not None and (len(values["cocharacter"]) != 4 or sum(values["cocharacter"])):
            raise InputError(f"Cocharacter needs four entries summing to 0, got {values['cocharacter']}")
        if values["m_max"] is None:
            values["m_max"] = Fraction(3 * values["degree"], 2) + 1
        return cls(command, **values)

    # Derived values

    @property
    def explicit_signs(self) -> bool:
        return self.signs is not None and self.signs not in SIGN_MODES

    def output_name(self) -> str:
        """Golden file stem: the configured name or one derived from the inputs."""
        if self.name:
            return self.name
        if self.command == "verify":
            return _slug(f"verify-{self.case or self.spec or 'empty'}-n{self.order}")
        if self.command == "global":
            return _slug(f"global-{self.kind}-{self.spec}-d{self.degree}")
        return _slug(f"vertex-{self.kind}-{self.spec or 'empty'}-n{self.order}")

    def record(self) -> dict:
        return {k: (None if v is None else str(v) if isinstance(v, Fraction) else v)
                for k, v in self._asdict().items()}
