import os
from dotenv import load_dotenv
from pathlib import Path

# Load environment variables from .env file
load_dotenv()

# Base directory
BASE_DIR = Path(__file__).resolve().parent.parent

# Logging Configuration
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")

# Default output directory for scenario reports
RESULTS_DIR = Path(os.getenv("RESULTS_DIR", str(BASE_DIR / "results")))

# Case-study defaults, SI units (bits, bits/second, seconds)
DEFAULT_LINK_RATE_BPS = 1e9
DEFAULT_NODE_LATENCY_S = 600e-9
# preamble 7 + SFD 1 + MAC header 14 + FCS 4 + interframe gap 12
DEFAULT_FRAME_OVERHEAD_BYTES = 38

# Traffic classes: name -> (payload bytes, rate kbps, priority)
TRAFFIC_CLASSES = {
    "HRT": (64, 80, 0),
    "SRT": (128, 128, 1),
    "NRT": (1024, 1000, 2),
}

# Numerical tolerances
REL_TOL = 1e-9
PIVOT_TOL = 1e-12

# Picard iteration oracle
PICARD_TOL = 1e-12
PICARD_MAX_ITER = 100000
PICARD_DIVERGENCE = 1e18

# Feasibility frontier search (fraction of link rate)
FRONTIER_RESOLUTION = 1e-4
