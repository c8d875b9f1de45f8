import os
import logging

log = logging.getLogger('truthbench')

_switch_values = {'on': True, 'true': True, 'yes': True, '1': True, 'off': False, 'false': False, 'no': False, '0': False}


class Options(object):
    """@TRUTHBENCH
    Global options, read from ~/.truthbench. General options are given as "key = value", per-module options as "domain.option = value".
    Only one instance is created, accessible as `truthbench.options.Main`.
    """
    _options_file = os.path.join(os.path.expanduser('~'), '.truthbench')

    def __init__(self):
        ## General options. Set defaults here, which are overwritten by values set in _options_file.
        self.log_level = None
        self.bar_mode = False
        self.verbosity = 1
        ## Per-module defaults, overwritten by "domain.option" lines in _options_file
        self._domain_options = {
            'kripke': {'cap': 12},
            'calculus': {'depth': 1, 'budget': 200000, 'reflection': False},
            }
        ## Read options from _options_file
        self._read_options()
        self._apply_log_level()

    def __getitem__(self, key):
        return self.__dict__[key]

    def __setitem__(self, key, val):
        self.__dict__[key] = val

    def __contains__(self, key):
        return (key in self.__dict__)

    def __repr__(self):
        print_string = ''
        for key, val in self.__dict__.items():
            print_string += '{}: {}\n'.format(key, val)
        print_string = print_string.rstrip('\n')

        return print_string

    def get(self, domain, option, system = None, override = None):
        """@TRUTHBENCH
        Resolve a per-module option. Precedence is command line, scenario file, options file, default.

        * `domain` Option domain, e.g. "kripke" or "calculus".
        * `option` Option name.
        * `system` SentenceSystem whose scenario options are consulted.
        * `override` Explicit value, e.g. from the command line.
        """
        if override is not None:
            return override
        if system is not None and option in system.options:
            return system.options[option]

        return self._domain_options[domain][option]

    def _read_options(self):
        ## If no options file present, do nothing
        if not os.path.isfile(Options._options_file): return
        with open(Options._options_file, 'r') as in_file:
            lines = filter(None, [line.strip() for line in in_file if not line.startswith('#')])
        for line in lines:
            if not Options._check_line(line): continue
            line_list = line.split('=', 1)
            domain = None
            option = line_list[0]
            if '.' in line_list[0]:
                domain, option = line_list[0].split('.', 1)
                ## Remove stray whitespaces
                domain = domain.strip()
            option = option.strip()
            ## Remove potential comment at end of the line
            val = line_list[-1].split('#', 1)[0].strip()
            if domain is None:
                ## Set general options
                if option not in self or option.startswith('_'):
                    log.warning('Unknown general option "{}"'.format(option))
                    continue
                self[option] = Options._convert(self[option], val)
            else:
                if domain not in self._domain_options:
                    log.warning('Trying to set an option for unknown domain "{}", list of available domains: {}'.format(domain, sorted(self._domain_options)))
                    continue
                if option not in self._domain_options[domain]:
                    log.warning('Unknown option "{}" for domain "{}"'.format(option, domain))
                    continue
                self._domain_options[domain][option] = Options._convert(self._domain_options[domain][option], val)

    def _apply_log_level(self):
        if not self.log_level: return
        level = getattr(logging, str(self.log_level).upper(), None)
        if not isinstance(level, int):
            log.warning('Unknown log level "{}"'.format(self.log_level))
            return
        log.setLevel(level)

    @staticmethod
    def _convert(default, val):
        ## Convert to the type of the default value
        try:
            if isinstance(default, bool):
                return _switch_values[val.lower()]
            if isinstance(default, int):
                return int(val)
        except (KeyError, ValueError):
            log.warning('Bad value "{}" in options file, keeping "{}"'.format(val, default))
            return default

        return val

    @staticmethod
    def _check_line(line):
        if line.count('=') > 1:
            log.warning('Bad line in options file (too many "=" delimiter): {}'.format(line))
            return False
        if line.count('=') == 0:
            log.warning('Bad line in options file (missing "=" delimiter): {}'.format(line))
            return False
        if line.split('=', 1)[0].count('.') > 1:
            log.warning('Bad line in options file (too many "." delimiter): {}'.format(line))
            return False

        return True

## Main Options singleton
Main = Options()
