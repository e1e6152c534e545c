# file_constants.py
class FileConstants:
    # Cayley table files
    CAYLEY_FILE_PATTERN = 'isg_n{order}_{sequence:06d}.tbl'
    CAYLEY_HEADER = 'n={size} e={idempotents}'
    CAYLEY_ENCODING = 'utf-8'

    # Breakdown table
    BREAKDOWN_FILE_NAME = 'breakdown_n{order}.csv'
    BREAKDOWN_COLUMNS = ['n', 'idempotents', 'shape', 'isgs', 'comm_isgs', 'ims', 'comm_ims',
                         'semilattices', 'lattices', 'comm_semilattices', 'comm_lattices']
    SHAPE_SEPARATOR = '.'

    # Semilattice cover-relation files
    SEMILATTICE_ENCODING = 'utf-8'
    ORDER_SEPARATOR = ':'
    COVER_SEPARATOR = ','
    COVER_SYMBOL = '<'

    # D-partition and group list arguments
    BLOCK_SEPARATOR = '|'
    ELEMENT_SEPARATOR = ','
    LINE_REFERENCE_SEPARATOR = ':'
