import { mkdtempSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { CSV_HEADER } from "../src/csv.js";

export interface SeriesSpec {
  ng: (t: number) => number;
  qd: (t: number) => number;
  uApprox: (t: number) => number;
}

export function makeCsvText(times: number[], spec: SeriesSpec): string {
  const lines = [CSV_HEADER];
  for (const t of times) {
    const ng = spec.ng(t);
    const qd = spec.qd(t);
    lines.push(
      [
        t.toFixed(9),
        String(ng),
        String(qd),
        String(2 * qd),
        String(spec.uApprox(t) / 2),
        String(spec.uApprox(t)),
        "1.0",
        "0.0",
      ].join(","),
    );
  }
  return lines.join("\n") + "\n";
}

export function defaultTimes(n = 61, dt = 0.5): number[] {
  return Array.from({ length: n }, (_, i) => i * dt);
}

export const BELL_SERIES: SeriesSpec = {
  ng: (t) => 0.5 * Math.exp(-0.05 * t),
  qd: (t) => 0.5 * Math.exp(-0.03 * t),
  uApprox: (t) => 2 * (1 - 2 * 0.5 * Math.exp(-0.05 * t)),
};

export const SEPARABLE_SERIES: SeriesSpec = {
  ng: (t) => 0.05 * Math.abs(Math.sin(0.8 * t)),
  qd: (t) => 0.08 * Math.abs(Math.sin(0.5 * t)),
  uApprox: (t) => 2 * (1 - 0.1 * Math.abs(Math.sin(0.8 * t))),
};

/** Write the four CSVs for one figure into a fresh temp dir. */
export function writeFigureDir(figureId: string, times = defaultTimes()): string {
  const dir = mkdtempSync(join(tmpdir(), "twinqubit-plots-"));
  for (const row of ["top", "bottom"]) {
    writeFileSync(join(dir, `${figureId}_${row}_bell.csv`), makeCsvText(times, BELL_SERIES));
    writeFileSync(
      join(dir, `${figureId}_${row}_separable.csv`),
      makeCsvText(times, SEPARABLE_SERIES),
    );
  }
  return dir;
}
