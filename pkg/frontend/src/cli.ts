#!/usr/bin/env node
/** `plot` command: read a figure's four CSVs and write a six-panel SVG. */

import { writeFileSync } from "node:fs";
import { pathToFileURL } from "node:url";

import { CsvFormatError } from "./csv.js";
import { FIGURE_IDS, figureCsvPaths, loadFigure, PanelSpec, QdScale } from "./figure.js";
import { renderFigureSvg } from "./svg.js";

const USAGE = `usage: plot --figure <fig1..fig8> [--in <dir>] [--out <path>] [--qd-scale raw|doubled]

Reads <in>/<figure>_{top,bottom}_{bell,separable}.csv (the simulator CLI's
output contract) and writes a six-panel SVG figure (NG | QD | QM-EUR columns,
top/bottom parameter rows).`;

export class UsageError extends Error {}

export interface CliOptions {
  figure: string;
  inputDir: string;
  outputPath: string;
  qdScale: QdScale;
}

export function parseCliArgs(argv: string[]): CliOptions {
  let figure: string | undefined;
  let inputDir = "./results";
  let outputPath: string | undefined;
  let qdScale: QdScale = "raw";

  for (let i = 0; i < argv.length; i++) {
    const arg = argv[i];
    const next = () => {
      i += 1;
      if (i >= argv.length) {
        throw new UsageError(`missing value for ${arg}`);
      }
      return argv[i];
    };
    switch (arg) {
      case "--figure":
        figure = next();
        break;
      case "--in":
        inputDir = next();
        break;
      case "--out":
        outputPath = next();
        break;
      case "--qd-scale": {
        const value = next();
        if (value !== "raw" && value !== "doubled") {
          throw new UsageError(`--qd-scale must be raw or doubled, got "${value}"`);
        }
        qdScale = value;
        break;
      }
      case "--help":
      case "-h":
        throw new UsageError(USAGE);
      default:
        throw new UsageError(`unknown argument "${arg}"\n${USAGE}`);
    }
  }
  if (figure === undefined) {
    throw new UsageError(`--figure is required\n${USAGE}`);
  }
  if (!(FIGURE_IDS as readonly string[]).includes(figure)) {
    throw new UsageError(`unknown figure "${figure}"; valid: ${FIGURE_IDS.join(", ")}`);
  }
  return {
    figure,
    inputDir,
    outputPath: outputPath ?? `${figure}.svg`,
    qdScale,
  };
}

export function renderToFile(options: CliOptions): string {
  const spec: PanelSpec = {
    figureId: options.figure,
    csvPaths: figureCsvPaths(options.figure, options.inputDir),
    qdScale: options.qdScale,
    outputPath: options.outputPath,
  };
  const svg = renderFigureSvg(loadFigure(spec), spec.qdScale);
  writeFileSync(spec.outputPath, svg + "\n");
  return spec.outputPath;
}

export function main(argv: string[]): number {
  let options: CliOptions;
  try {
    options = parseCliArgs(argv);
  } catch (err) {
    console.error((err as Error).message);
    return 2;
  }
  try {
    const written = renderToFile(options);
    console.log(written);
    return 0;
  } catch (err) {
    if (err instanceof CsvFormatError) {
      console.error(err.message);
      return 1;
    }
    console.error((err as Error).message);
    return 1;
  }
}

// invoked as a script (not imported by tests)
if (process.argv[1] && import.meta.url === pathToFileURL(process.argv[1]).href) {
  process.exit(main(process.argv.slice(2)));
}
