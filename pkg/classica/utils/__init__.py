from classica.utils.classica_logger import classica_logger
from classica.utils.config_reader import config_reader
