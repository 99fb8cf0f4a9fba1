'''
Grids of map values as CSV: one row per node, t varying slowest, every
number written with 17 significant digits.
'''
import logging

import pandas as pd

from fieldcheck.residuals import evaluate

logger = logging.getLogger(__name__)

FLOAT_FORMAT = '%.17g'


def map_frame(F, g):
    '''
    Evaluate F on every node of the grid g.

    Returns
    -------
    frame: pandas.DataFrame
        Columns t, x, out_t, out_x
    '''
    t, x = g.nodes()
    out_t, out_x = evaluate(F, t, x)

    return pd.DataFrame({
        't': t.ravel(),
        'x': x.ravel(),
        'out_t': out_t.ravel(),
        'out_x': out_x.ravel(),
    }, columns=['t', 'x', 'out_t', 'out_x'])


def to_csv(frame, path_or_buf=None):
    '''
    Write (or return, when no target is given) the frame as CSV. The
    output doesn't depend on the locale.
    '''
    return frame.to_csv(path_or_buf, index=False, float_format=FLOAT_FORMAT,
                        lineterminator='\n')
