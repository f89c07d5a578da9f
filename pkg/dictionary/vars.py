from dotenv import load_dotenv
import os


load_dotenv()


def _env_flag(name: str, default: str = "false") -> bool:
    return os.getenv(name, default).strip().lower() in ("1", "true", "yes")


LOG_LEVEL = os.getenv('PP2_LOG_LEVEL', 'WARNING').upper()
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

# Limites das buscas exaustivas
MINOR_MAX_PATTERN = int(os.getenv('PP2_MINOR_MAX_PATTERN', '10'))
MINOR_MAX_HOST = int(os.getenv('PP2_MINOR_MAX_HOST', '24'))
SEARCH_BUDGET = int(os.getenv('PP2_SEARCH_BUDGET', str(2 ** 24)))
ENUMERATION_MAX_N = int(os.getenv('PP2_ENUMERATION_MAX_N', '12'))
DOMINATION_MAX_ORDER = int(os.getenv('PP2_DOMINATION_MAX_ORDER', '32'))

MAX_ORDER = 64

# Cache de veredictos (Redis)
CACHE_ENABLED = _env_flag('PP2_CACHE_ENABLED')
REDIS_URL = os.getenv('REDIS_URL')
CACHE_EXPIRATION = int(os.getenv('PP2_CACHE_EXPIRATION', '86400'))
CACHE_ACTIONS = ("status", "clear")

DEFAULT_JOBS = 1

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BOUND = 3

GRAPH_FORMATS = ("graph6", "edgelist")

VERIFY_TARGETS = (
    "thm2",
    "domination",
    "omega-mn",
    "omega-signed",
    "omega-pushable",
)

# Números de clique absolutos conhecidos da classe, por modo e tipo (m, n)
KNOWN_CLIQUE_NUMBERS = {
    ("mn", 1, 0): 9,
    ("mn", 0, 2): 8,
    ("signed", 0, 0): 7,
    ("pushable", 0, 0): 7,
}