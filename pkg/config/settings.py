"""
Django settings for the refrig project.

There is no web surface: the project is driven through management commands
(python manage.py certify ...), and Celery fans batch jobs out.
"""
import os
from pathlib import Path

# Optional: load environment variables from .env if python-dotenv is installed.
try:
    from dotenv import load_dotenv
except ImportError:
    def load_dotenv(*args, **kwargs):
        """Fallback no-op if python-dotenv is not installed."""
        return None

load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.getenv('DJANGO_SECRET_KEY', 'refrig-local-only-key')

DEBUG = os.getenv('DEBUG', 'False') == 'True'

ALLOWED_HOSTS = []

# Application definition
INSTALLED_APPS = [
    'apps.gain_graphs',
    'apps.sparsity',
    'apps.directions',
    'apps.rigidity',
    'apps.corpus',
]

# Reports and corpora are plain files; nothing is persisted in a database.
DATABASES = {}

USE_TZ = True
TIME_ZONE = 'UTC'

# Run configuration (see config/runconfig.py)
REFRIG = {
    'SEED': int(os.getenv('REFRIG_SEED', '0')),
    'RETRY_CAP': int(os.getenv('REFRIG_RETRY_CAP', '32')),
    # epsilon = 2 ** -PERTURBATION_EXPONENT, shrunk by 2 ** -SHRINK_EXPONENT per retry
    'PERTURBATION_EXPONENT': int(os.getenv('REFRIG_PERTURBATION_EXPONENT', '20')),
    'SHRINK_EXPONENT': int(os.getenv('REFRIG_SHRINK_EXPONENT', '10')),
    # integer samples are drawn from [-2 ** SAMPLE_BITS, 2 ** SAMPLE_BITS]
    'SAMPLE_BITS': int(os.getenv('REFRIG_SAMPLE_BITS', '20')),
    'WITNESS_BASE': int(os.getenv('REFRIG_WITNESS_BASE', str(2 ** 16))),
    'GENERIC_TRIALS': int(os.getenv('REFRIG_GENERIC_TRIALS', '5')),
    'CORPUS_DIR': Path(os.getenv('REFRIG_CORPUS_DIR', str(BASE_DIR / 'corpus'))),
}

# Logging
LOG_LEVEL = os.getenv('REFRIG_LOG_LEVEL', 'WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
            'stream': 'ext://sys.stderr',
        },
    },
    'loggers': {
        'apps': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
        'celery': {
            'handlers': ['console'],
            'level': 'WARNING',
        },
    },
}

# Celery Configuration
# Without REDIS_URL the broker is in-memory and tasks run eagerly in-process.
CELERY_BROKER_URL = os.getenv('REDIS_URL', 'memory://')
CELERY_RESULT_BACKEND = os.getenv('REDIS_URL', 'cache+memory://')
CELERY_TASK_ALWAYS_EAGER = os.getenv('REFRIG_EAGER', 'True') == 'True'
CELERY_TASK_EAGER_PROPAGATES = True
CELERY_ACCEPT_CONTENT = ['json']
CELERY_TASK_SERIALIZER = 'json'
CELERY_RESULT_SERIALIZER = 'json'
CELERY_TIMEZONE = TIME_ZONE
