"""thumbtype: virtual-QWERTY tap decoding, typist simulation, and text-entry metrics."""

from .geometry import (
    Key,
    KeyboardLayout,
    LayoutError,
    LETTERS,
    TouchPoint,
    build_layout,
    key_center,
    nearest_key,
)
from .lexicon import Lexicon, LexiconError, WordEntry, load_lexicon, load_shipped_lexicon
from .decoder import (
    BeamConfig,
    CandidateSequence,
    DEFAULT_BEAM,
    SpatialModel,
    Suggestion,
    SuggestionPair,
    WIDE_OPEN_BEAM,
    candidate_sequences,
    nearest_letter_string,
    suggest,
)
from .metrics import (
    InputEvent,
    MetricError,
    MetricsReport,
    TrialLog,
    corrected_error_rate,
    iki_series,
    kpd_series,
    mean_iki,
    mean_kpd,
    msd,
    report,
    summarize,
    uncorrected_error_rate,
    wpm,
)
from .session import PhraseSet, Session, SessionError, load_phrases
from .simulator import (
    DebounceThresholds,
    ExperimentConfig,
    PROFILES,
    TypistProfile,
    calibrate_motor_sigma,
    debounce,
    run_experiment,
    simulate_trial,
)

__version__ = "0.1.0"
