# logging_setup.py
# Libraries
import os
# Constants
from config.log_constants import LogConstants
# Personal libraries
from utils.logger_manager import LoggerManager
from utils.file_manager import FileManager

FileManager().create_directory(dir_path=LogConstants.LOG_PATH)
log_manager = LoggerManager()


def _component_logger(name: str):
    log_file = os.path.join(LogConstants.LOG_PATH, name.replace('-', '_') + LogConstants.FILE_SUFFIX)
    return log_manager.get_logger(logger_name=name, log_file=log_file)


log_group_catalog = _component_logger('group-catalog')
log_semilattice_generator = _component_logger('semilattice-generator')
log_shape_planner = _component_logger('shape-planner')
log_basis_order_search = _component_logger('basis-order-search')
log_esn_builder = _component_logger('esn-builder')
log_isomorphism_tester = _component_logger('isomorphism-tester')
log_enumerator = _component_logger('enumerator')
log_output_writer = _component_logger('output-writer')
log_cli = _component_logger('cli')
