import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

from dotenv import find_dotenv, load_dotenv

SUITE_NAMES = ("symbols", "residue", "crossed", "opalg")
EMITTER_NAMES = ("console", "json")

# Case counts at cases_scale = 1.0
BASE_CASE_COUNTS = {
    "symbols": {"field_axioms": 1000, "numeric_hom": 200, "parseval": 50, "clifford": 50,
                "associativity": 150, "leibniz": 20, "leading": 20, "completeness": 20,
                "parametrix": 10, "dilation": 20, "documents": 100},
    "residue": {"trace_property": 150, "oracle": 36, "locality": 20, "gaussian_factor": 20},
    "crossed": {"automorphism": 50, "composition": 20, "residue_invariance": 50,
                "localized_trace": 50, "radul_antisymmetry": 30, "hochschild": 30,
                "radul_locality": 10, "kappa": 20, "winding": 5},
    "opalg": {"filtration": 100, "flow_algebra": 30, "graded_trace": 30, "mehler": 10,
              "mehler_vanishing": 5, "duhamel": 20, "dirac": 20, "lichnerowicz": 10,
              "reduction": 20},
}


@dataclass
class EngineConfig:
    """Configuration for the symbolic engine and its verification suites"""

    # Arithmetic settings
    modulus: int = 8
    digits: int = 30
    floor_depth: int = 6
    eps_order: int = 4

    # Oracle settings
    cubature_tol: float = 1e-9
    toeplitz_cutoff: int = 40

    # Verification settings
    verify_seed: int = 42
    cases_scale: float = 1.0
    enabled_suites: List[str] = field(default_factory=lambda: list(SUITE_NAMES))
    default_emitter: str = "console"
    report_dir: str = "reports"
    debug: bool = False
    inject_fault: bool = False

    @classmethod
    def from_env(cls, env_file: Optional[str] = None) -> 'EngineConfig':
        """Create config from environment variables"""
        if env_file:
            load_dotenv(env_file)
        else:
            env_file = find_dotenv(usecwd=True)
            if env_file:
                load_dotenv(env_file)

        return cls(
            # Arithmetic settings
            modulus=int(os.getenv("HEISENBERG_MODULUS", "8")),
            digits=int(os.getenv("HEISENBERG_DIGITS", "30")),
            floor_depth=int(os.getenv("HEISENBERG_FLOOR_DEPTH", "6")),
            eps_order=int(os.getenv("HEISENBERG_EPS_ORDER", "4")),

            # Oracle settings
            cubature_tol=float(os.getenv("HEISENBERG_CUBATURE_TOL", "1e-9")),
            toeplitz_cutoff=int(os.getenv("HEISENBERG_TOEPLITZ_CUTOFF", "40")),

            # Verification settings
            verify_seed=int(os.getenv("HEISENBERG_VERIFY_SEED", "42")),
            cases_scale=float(os.getenv("HEISENBERG_CASES_SCALE", "1.0")),
            enabled_suites=[
                name.strip() for name in
                os.getenv("HEISENBERG_ENABLED_SUITES", ",".join(SUITE_NAMES)).split(",")
                if name.strip()
            ],
            default_emitter=os.getenv("HEISENBERG_DEFAULT_EMITTER", "console"),
            report_dir=os.getenv("HEISENBERG_REPORT_DIR", "reports"),
            debug=os.getenv("HEISENBERG_DEBUG", "false").lower() == "true",
            inject_fault=os.getenv("HEISENBERG_INJECT_FAULT", "false").lower() == "true",
        )

    def validate(self) -> None:
        """Validate configuration"""
        if self.modulus <= 0 or self.modulus % 8:
            raise ValueError(f"modulus must be a positive multiple of 8, got {self.modulus}")
        if self.digits < 15:
            raise ValueError("numeric rendering needs at least 15 digits")
        if self.cubature_tol < 1e-10:
            raise ValueError("cubature tolerance below 1e-10 is not supported")
        if self.eps_order < 0:
            raise ValueError("eps order must be non-negative")
        if self.floor_depth < 1:
            raise ValueError("floor depth must be at least 1")
        if self.cases_scale <= 0:
            raise ValueError("cases scale must be positive")

        unknown = [name for name in self.enabled_suites if name not in SUITE_NAMES]
        if unknown:
            raise ValueError(f"unknown suites: {', '.join(unknown)}")
        if self.default_emitter not in EMITTER_NAMES:
            raise ValueError(f"unknown emitter: {self.default_emitter}")

    def get_suite_config(self, suite: str) -> Dict[str, Any]:
        """Get suite-specific configuration"""
        if suite not in BASE_CASE_COUNTS:
            return {}
        counts = {
            name: max(1, int(round(count * self.cases_scale)))
            for name, count in BASE_CASE_COUNTS[suite].items()
        }
        configs = {
            "symbols": {
                "seed": self.verify_seed,
                "counts": counts,
                "floor_depth": self.floor_depth,
                "digits": self.digits,
            },
            "residue": {
                "seed": self.verify_seed,
                "counts": counts,
                "floor_depth": self.floor_depth,
                "cubature_tol": self.cubature_tol,
                "oracle_tol": 1e-6,
            },
            "crossed": {
                "seed": self.verify_seed,
                "counts": counts,
                "floor_depth": self.floor_depth,
                "toeplitz_cutoff": self.toeplitz_cutoff,
            },
            "opalg": {
                "seed": self.verify_seed,
                "counts": counts,
                "eps_order": self.eps_order,
            },
        }
        config = configs[suite]
        config["inject_fault"] = self.inject_fault
        return config


class EngineSetup:
    """Setup and initialization for verification runs"""

    def __init__(self, config: EngineConfig):
        self.config = config
        self.emitters = {}
        self.suites = {}

    def setup(self) -> None:
        """Setup all components based on configuration"""
        self._setup_emitters()
        self._setup_suites()

    def _setup_emitters(self) -> None:
        """Setup configured emitters"""
        from .emitters.console import ConsoleEmitter
        from .emitters.json_emitter import JSONEmitter

        # Always setup console emitter
        self.emitters["console"] = ConsoleEmitter()
        self.emitters["json"] = JSONEmitter(Path(self.config.report_dir))

    def _setup_suites(self) -> None:
        """Setup enabled verification suites"""
        from .suites import SUITES

        for name in self.config.enabled_suites:
            self.suites[name] = SUITES[name](self.config.get_suite_config(name))

    def get_emitter(self, name: str = None):
        """Get emitter by name"""
        return self.emitters.get(name or self.config.default_emitter)

    def get_suite(self, name: str):
        """Get suite by name"""
        return self.suites.get(name)
