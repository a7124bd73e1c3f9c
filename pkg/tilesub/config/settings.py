import os
from dotenv import load_dotenv

load_dotenv()

# Enumeration settings
ENUMERATION_CAP = int(os.getenv("TILESUB_CAP", "8"))
DEFAULT_JOBS = int(os.getenv("TILESUB_JOBS", "1"))

# Oracle settings
BRUTE_FORCE_MAX_FACES = int(os.getenv("TILESUB_BRUTE_FORCE_MAX_FACES", "20"))

# Recognition settings
RECOGNITION_SOLUTION_LIMIT = int(os.getenv("TILESUB_SOLUTION_LIMIT", "10000"))

# Logging settings
LOG_LEVEL = os.getenv("TILESUB_LOG_LEVEL", "WARNING").upper()

# Document format
DOCUMENT_FORMAT = "gmap2-v1"
