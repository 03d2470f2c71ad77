"""Exception types raised across the library.

Every class name doubles as a stable error tag: it is the first token of
the message the CLI prints on a validation failure, so downstream wrappers
can match on it.
"""


class SpikeInfoError(ValueError):
    """Base class for all validation errors raised by this package."""


# probability models
class InvalidDistribution(SpikeInfoError):
    pass


class InvalidParameter(SpikeInfoError):
    pass


class AxisOutOfRange(SpikeInfoError):
    pass


class ZeroConditioningEvent(SpikeInfoError):
    pass


class InsufficientData(SpikeInfoError):
    pass


class DegenerateMean(SpikeInfoError):
    pass


# processes
class NegativeRate(SpikeInfoError):
    pass


class HistoryLengthMismatch(SpikeInfoError):
    pass


class InsufficientSpikes(SpikeInfoError):
    pass


# information measures
class ZeroProbability(SpikeInfoError):
    pass


class ZeroMarginal(SpikeInfoError):
    pass


class FamilyMismatch(SpikeInfoError):
    pass


class UnsupportedFamily(SpikeInfoError):
    pass


class DegenerateEntropy(SpikeInfoError):
    pass


class NonStochasticChannel(SpikeInfoError):
    pass


# estimators
class EmptySample(SpikeInfoError):
    pass


class OutOfRangeSample(SpikeInfoError):
    pass


class DegenerateRange(SpikeInfoError):
    pass


class LengthMismatch(SpikeInfoError):
    pass


class SeriesTooShort(SpikeInfoError):
    pass


# spike trains
class MultiSpikeBin(SpikeInfoError):
    pass


class NonpositiveBinWidth(SpikeInfoError):
    pass


class InvalidRate(SpikeInfoError):
    pass


class NonpositiveMean(SpikeInfoError):
    pass


class ZeroSpikes(SpikeInfoError):
    pass


# significance testing
class BadBlockLength(SpikeInfoError):
    pass
