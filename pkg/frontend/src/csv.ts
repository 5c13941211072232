/** Strict reader for the simulator's trajectory CSV contract. */

export const CSV_HEADER =
  "t,ng,qd,qd_doubled,u_exact,u_approx,purity,trace_error";

export const COLUMN_NAMES = CSV_HEADER.split(",");

export interface TrajectoryTable {
  /** Path the table was read from, used in error messages. */
  path: string;
  times: number[];
  /** Column name -> values, excluding the time column. */
  columns: Map<string, number[]>;
}

export class CsvFormatError extends Error {}

/**
 * Parse CSV text against the fixed header contract.
 *
 * Any structural defect (wrong header, short row, non-numeric field, empty
 * body) raises CsvFormatError naming the path and the offending line.
 */
export function parseTrajectoryCsv(text: string, path: string): TrajectoryTable {
  const lines = text.split(/\r?\n/);
  // a single trailing newline is fine; interior blank lines are not
  if (lines.length > 0 && lines[lines.length - 1] === "") {
    lines.pop();
  }
  if (lines.length === 0) {
    throw new CsvFormatError(`${path}: file is empty`);
  }
  if (lines[0] !== CSV_HEADER) {
    throw new CsvFormatError(
      `${path}: line 1: expected header "${CSV_HEADER}", got "${lines[0]}"`,
    );
  }
  if (lines.length === 1) {
    throw new CsvFormatError(`${path}: no data rows after the header`);
  }

  const times: number[] = [];
  const columns = new Map<string, number[]>(
    COLUMN_NAMES.slice(1).map((name) => [name, []]),
  );
  for (let i = 1; i < lines.length; i++) {
    const lineNumber = i + 1;
    const fields = lines[i].split(",");
    if (fields.length !== COLUMN_NAMES.length) {
      throw new CsvFormatError(
        `${path}: line ${lineNumber}: expected ${COLUMN_NAMES.length} fields, got ${fields.length} (truncated file?)`,
      );
    }
    const values = fields.map((field, j) => {
      const value = Number(field);
      if (field.trim() === "" || Number.isNaN(value)) {
        // NaN is legal only in the u_exact column (the CLI's skip flag)
        if (COLUMN_NAMES[j] === "u_exact" && field.trim().toLowerCase() === "nan") {
          return Number.NaN;
        }
        throw new CsvFormatError(
          `${path}: line ${lineNumber}: field "${COLUMN_NAMES[j]}" is not a number: "${field}"`,
        );
      }
      return value;
    });
    times.push(values[0]);
    for (let j = 1; j < COLUMN_NAMES.length; j++) {
      columns.get(COLUMN_NAMES[j])!.push(values[j]);
    }
  }
  return { path, times, columns };
}
