import sys
import logging

log = logging.getLogger('truthbench')


class Printer(object):
    """@TRUTHBENCH
    Printer for reports and progress output. Reports go to stdout, progress bars to stderr.

    * `verbosity` Verbosity of the printer's output, 0 silences progress output.
    * `bar_mode` Show progress bars for long enumerations.
    """
    def __init__(self, verbosity = 1, bar_mode = False):
        ## Printing verbosity
        self._verbosity = verbosity
        ## Running in progress bar mode?
        self._bar_mode = bar_mode
        ### Check if tqdm is available, otherwise disable bar mode
        if self._bar_mode:
            try:
                from tqdm import tqdm
            except ImportError:
                log.warning('bar_mode is activated but the tqdm module is not available')
                log.warning('Please install tqdm to use the bar mode')
                self._bar_mode = False
        self._bar_format = '{desc}: {percentage:3.0f}%|{bar}| {n_fmt}/{total_fmt}'

    @property
    def bar_mode(self):
        return self._bar_mode and self._verbosity > 0

    def progress(self, iterable, total, desc, unit = 'it'):
        """@TRUTHBENCH
        Wrap an iterable with a progress bar if bar mode is active.

        * `iterable` The iterable to wrap.
        * `total` Number of expected items.
        * `desc` Bar label.
        * `unit` Unit shown next to the counts.
        """
        if not self.bar_mode:
            return iterable
        from tqdm import tqdm

        return tqdm(iterable, total = total, desc = desc, unit = unit, bar_format = self._bar_format, file = sys.stderr, leave = False)

    def print_report(self, report, stream = None):
        """@TRUTHBENCH
        Print the lines of a report.
        """
        stream = stream or sys.stdout
        for line in report.lines:
            stream.write(line)
            stream.write('\n')
        stream.flush()
