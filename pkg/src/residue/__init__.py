from .oracle import annulus_oracle, gaussian_factor_oracle
from .sphere import SphereMoment, gaussian_moment, sphere_moment
from .wres import wres

__all__ = [
    "SphereMoment",
    "annulus_oracle",
    "gaussian_factor_oracle",
    "gaussian_moment",
    "sphere_moment",
    "wres",
]
