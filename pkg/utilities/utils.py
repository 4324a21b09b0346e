import csv
import io
import json
import os
import sys
import time


class bar(object):
    """Single-line trial counter, redrawn in place on stderr by default."""

    def __init__(self, total, width=40, stream=None):
        self.total = total
        self.width = width
        self.stream = stream or sys.stderr
        self.begin = None

    def update(self, current, msg=''):
        if self.begin is None or current == 0:
            self.begin = time.perf_counter()
        done = self.width * (current + 1) // self.total
        line = '\r[{}{}] {}/{} {:.1f}s{}'.format(
            '#' * done, '.' * (self.width - done), current + 1, self.total,
            time.perf_counter() - self.begin, msg)
        self.stream.write(line)
        if current + 1 >= self.total:
            self.stream.write('\n')
        self.stream.flush()


def make_bar(args, total):
    if getattr(args, 'no_progressbar', True) or total < 2:
        return None
    return bar(total)


def to_json(report):
    return json.dumps(report, indent=1, sort_keys=True, default=str)


def to_csv(records, columns):
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=columns, extrasaction='ignore',
                            lineterminator='\n')
    writer.writeheader()
    for r in records:
        writer.writerow(r)
    return out.getvalue()


def emit(text, args):
    """Write a rendered report to --out or stdout."""
    if args.out:
        with open(args.out, 'w') as outfile:
            outfile.write(text)
            if not text.endswith('\n'):
                outfile.write('\n')
    else:
        sys.stdout.write(text)
        if not text.endswith('\n'):
            sys.stdout.write('\n')


def result_save(report, args):
    with open(args.results_dir + "/results.json", 'w') as outfile:
        json.dump(report, outfile, indent=1, sort_keys=True, default=str)
    with open(args.results_dir + "/args.json", 'w') as outfile:
        json.dump(args.__dict__, outfile, indent=1, sort_keys=True,
                  default=str)


def finish(report, args, text=None, records=None, columns=None):
    """
    Render in the requested format, write it, and store a copy under the
    results directory when --storeresults is set.
    """
    if args.format == 'text' and text is not None:
        emit(text, args)
    elif args.format == 'csv' and records is not None:
        emit(to_csv(records, columns), args)
    else:
        emit(to_json(report), args)
    if args.storeresults and os.path.isdir(args.results_dir):
        result_save(report, args)

