/** Assembles the four per-figure CSVs into renderable panel data. */

import { readFileSync } from "node:fs";
import { join } from "node:path";

import { CsvFormatError, parseTrajectoryCsv, TrajectoryTable } from "./csv.js";

export type QdScale = "raw" | "doubled";

export const FIGURE_IDS = [
  "fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8",
] as const;

export interface PanelSpec {
  figureId: string;
  csvPaths: [string, string, string, string];
  qdScale: QdScale;
  outputPath: string;
}

export interface FigureRow {
  label: "top" | "bottom";
  bell: TrajectoryTable;
  separable: TrajectoryTable;
}

export interface FigureData {
  figureId: string;
  rows: [FigureRow, FigureRow];
}

export function figureCsvPaths(figureId: string, inputDir: string): [string, string, string, string] {
  return [
    join(inputDir, `${figureId}_top_bell.csv`),
    join(inputDir, `${figureId}_top_separable.csv`),
    join(inputDir, `${figureId}_bottom_bell.csv`),
    join(inputDir, `${figureId}_bottom_separable.csv`),
  ];
}

function readTable(path: string): TrajectoryTable {
  let text: string;
  try {
    text = readFileSync(path, "utf8");
  } catch (err) {
    throw new CsvFormatError(`${path}: cannot read file: ${(err as Error).message}`);
  }
  return parseTrajectoryCsv(text, path);
}

/** All four tables must sit on one time grid; mismatches are a hard error. */
export function assertSharedTimeGrid(tables: TrajectoryTable[]): void {
  const reference = tables[0];
  for (const table of tables.slice(1)) {
    if (table.times.length !== reference.times.length) {
      throw new CsvFormatError(
        `${table.path}: time grid has ${table.times.length} rows but ${reference.path} has ${reference.times.length}`,
      );
    }
    for (let i = 0; i < reference.times.length; i++) {
      if (table.times[i] !== reference.times[i]) {
        throw new CsvFormatError(
          `${table.path}: time grid differs from ${reference.path} at row ${i + 1} (${table.times[i]} vs ${reference.times[i]})`,
        );
      }
    }
  }
}

export function loadFigure(spec: PanelSpec): FigureData {
  const [topBell, topSep, bottomBell, bottomSep] = spec.csvPaths.map(readTable);
  assertSharedTimeGrid([topBell, topSep]);
  assertSharedTimeGrid([bottomBell, bottomSep]);
  return {
    figureId: spec.figureId,
    rows: [
      { label: "top", bell: topBell, separable: topSep },
      { label: "bottom", bell: bottomBell, separable: bottomSep },
    ],
  };
}
