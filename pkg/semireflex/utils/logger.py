import os
import sys
from tqdm import tqdm

def def_tqdm(x, **kwargs):
    # stderr keeps stdout reports byte-identical
    return tqdm(x, leave=False, file=sys.stderr, bar_format="{desc} {n_fmt}/{total_fmt} [{elapsed}<{remaining}, {rate_fmt}{postfix}]", **kwargs)

def print_err(msg):
    print(msg, file=sys.stderr)

def get_threads(hps=None):
    threads = os.environ.get('SEMIREFLEX_THREADS')
    if threads is not None:
        try:
            return max(1, int(threads))
        except ValueError:
            raise ValueError(f'SEMIREFLEX_THREADS must be an integer, got {threads}')
    return max(1, hps.threads) if hps is not None else 1

def init_logging(hps):
    if not hps.logdir:
        return None
    logdir = f"{hps.logdir}/{hps.name}" if hps.name else hps.logdir
    if not os.path.exists(logdir):
        os.makedirs(logdir)
    print_err(f"Logging to {logdir}")
    logger = Logger(logdir)
    logger.add_text('hps', str(dict(sorted(hps.items()))))
    return logger

class Logger:
    def __init__(self, logdir):
        from tensorboardX import SummaryWriter
        self.sw = SummaryWriter(f"{logdir}/logs")
        self.logdir = logdir

    def flush(self):
        self.sw.flush()

    def close(self):
        self.sw.close()

    def add_text(self, tag, text):
        self.sw.add_text(tag, text)

    def add_scalar(self, tag, val):
        self.sw.add_scalar(tag, val)

    def add_report(self, report):
        for name, (passed, failed) in sorted(report.counts.items()):
            self.add_scalar(f'{name}/pass', passed)
            self.add_scalar(f'{name}/fail', failed)
        self.add_text('report', report.format())
        self.flush()
