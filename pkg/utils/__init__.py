# input_parsing dipende da skeleton: va importato direttamente, non da qui
from .logger import configure_logging, get_logger
