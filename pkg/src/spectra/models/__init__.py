# src/spectra/models/__init__.py
from .reports import CsfSnapshot, CsfTrajectory, IdentityResidualReport, SpectralReport

__all__ = ['CsfSnapshot', 'CsfTrajectory', 'IdentityResidualReport', 'SpectralReport']
