import csv
import json

__all__ = ["format_sequence", "write_json", "write_csv", "write_text"]


def format_sequence(terms):
    """(1, 4) style rendering of a root sequence"""
    return "({0})".format(", ".join(str(int(tt)) for tt in terms))


def write_json(payload, stream):
    """UTF-8 JSON with sorted keys"""
    json.dump(payload, stream, sort_keys=True, indent=2, ensure_ascii=False)
    stream.write("\n")


def write_csv(header, rows, stream):
    """Header row, then one row per record; every row has len(header) cells"""
    writer = csv.writer(stream)
    writer.writerow(header)
    for row in rows:
        if len(row) != len(header):
            raise ValueError("CSV row has {0} cells, expected {1}".format(len(row), len(header)))
        writer.writerow(row)


def write_text(lines, stream):
    for line in lines:
        stream.write(line + "\n")
