import { writeFileSync } from "node:fs";
import { join } from "node:path";

import { describe, expect, it } from "vitest";

import { CsvFormatError } from "../src/csv.js";
import { figureCsvPaths, loadFigure } from "../src/figure.js";
import { BELL_SERIES, defaultTimes, makeCsvText, writeFigureDir } from "./fixtures.js";

describe("loadFigure", () => {
  it("assembles four CSVs into two rows", () => {
    const dir = writeFigureDir("fig4");
    const data = loadFigure({
      figureId: "fig4",
      csvPaths: figureCsvPaths("fig4", dir),
      qdScale: "raw",
      outputPath: "unused.svg",
    });
    expect(data.rows[0].label).toBe("top");
    expect(data.rows[1].label).toBe("bottom");
    expect(data.rows[0].bell.times).toEqual(data.rows[0].separable.times);
  });

  it("reports a missing file by path", () => {
    const dir = writeFigureDir("fig4");
    expect(() =>
      loadFigure({
        figureId: "fig5",
        csvPaths: figureCsvPaths("fig5", dir),
        qdScale: "raw",
        outputPath: "unused.svg",
      }),
    ).toThrow(/fig5_top_bell\.csv: cannot read file/);
  });

  it("rejects mismatched time grids", () => {
    const dir = writeFigureDir("fig4");
    writeFileSync(
      join(dir, "fig4_top_separable.csv"),
      makeCsvText(defaultTimes(61, 0.25), BELL_SERIES),
    );
    expect(() =>
      loadFigure({
        figureId: "fig4",
        csvPaths: figureCsvPaths("fig4", dir),
        qdScale: "raw",
        outputPath: "unused.svg",
      }),
    ).toThrow(CsvFormatError);
    expect(() =>
      loadFigure({
        figureId: "fig4",
        csvPaths: figureCsvPaths("fig4", dir),
        qdScale: "raw",
        outputPath: "unused.svg",
      }),
    ).toThrow(/time grid differs/);
  });

  it("rejects grids of different lengths", () => {
    const dir = writeFigureDir("fig4");
    writeFileSync(
      join(dir, "fig4_bottom_bell.csv"),
      makeCsvText(defaultTimes(10), BELL_SERIES),
    );
    expect(() =>
      loadFigure({
        figureId: "fig4",
        csvPaths: figureCsvPaths("fig4", dir),
        qdScale: "raw",
        outputPath: "unused.svg",
      }),
    ).toThrow(/time grid has \d+ rows but .* has \d+/);
  });
});
