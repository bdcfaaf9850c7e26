import cProfile
import functools
import io
import logging
import pstats
import time

log = logging.getLogger(__name__)


def profile(fnc):
    """Create decorator function that uses cProfile to profile a function."""
    @functools.wraps(fnc)
    def inner(*args, **kwargs):

        pr = cProfile.Profile()
        pr.enable()
        retval = fnc(*args, **kwargs)
        pr.disable()
        s = io.StringIO()
        sortby = 'cumulative'
        ps = pstats.Stats(pr, stream=s).sort_stats(sortby)
        ps.print_stats(30)
        log.info(s.getvalue())
        return retval

    return inner


def timing(f):
    @functools.wraps(f)
    def wrap(*args, **kwargs):
        time1 = time.perf_counter()
        ret = f(*args, **kwargs)
        time2 = time.perf_counter()
        log.info('%s function took %0.3f ms', f.__name__,
                 (time2 - time1) * 1000.0)
        return ret
    return wrap
