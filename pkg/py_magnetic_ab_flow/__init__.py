# Version
from py_magnetic_ab_flow._version import __version__

# CLI
from py_magnetic_ab_flow.cli import (
    Commands, CommandsConst, RunConfig, RunConfigConst, RunConfigLoader, VerifyCheck, VerifyCheckKeys, VerifySuites,
    VerifySuitesConst
)

# Common
from py_magnetic_ab_flow.common import (
    AccuracyError, CalibrationError, ConfigError, CutoffInsufficientError, DomainError, MabEnumDict, MagneticParams,
    MagneticParamsConst, ModeIndex, NonIntegerFluxError, PolarPoint, ResultTable, SingularTime, SingularTimeError,
    TruncationConfig, TruncationConfigConst, TruncationError
)

# Decay
from py_magnetic_ab_flow.decay import (
    DecayGrid, DecayGridConst, DecayScanner, DecayScannerConst, DecayScanRow, DecayScanRowKeys, DecayVerifier,
    DecayVerifierConst, OmegaRegion, OmegaRegionTags
)

# Evolve
from py_magnetic_ab_flow.evolve import (
    SampledFunction, SampledFunctionConst, SampledFunctionFactory, SchrodingerEvolution, SchrodingerEvolutionConst,
    SpectralCoefficients
)

# Kernels
from py_magnetic_ab_flow.kernels import (
    BesselSeriesKernel, BesselSeriesKernelConst, CalibrationResult, CalibrationResultKeys, HeatKernel, HeatKernelPair,
    HeatKernelPairKeys, KernelValue, KernelValueKeys, MehlerKernel, PoissonIdentity, PrefactorCalibration,
    PrefactorCalibrationConst
)

# Saver
from py_magnetic_ab_flow.saver import TableFormats, TableSaver

# Special functions
from py_magnetic_ab_flow.specfun import (
    BesselI, BesselIConst, Binomial, GammaFunction, GammaFunctionConst, GaussQuadrature, Laguerre, PkmPolynomial,
    Pochhammer
)

# Spectrum
from py_magnetic_ab_flow.spectrum import MagneticSpectrum, MagneticSpectrumConst

# Utils
from py_magnetic_ab_flow.utils import Utils, UtilsConst
