export { CSV_HEADER, COLUMN_NAMES, CsvFormatError, parseTrajectoryCsv } from "./csv.js";
export type { TrajectoryTable } from "./csv.js";
export {
  FIGURE_IDS,
  assertSharedTimeGrid,
  figureCsvPaths,
  loadFigure,
} from "./figure.js";
export type { FigureData, FigureRow, PanelSpec, QdScale } from "./figure.js";
export { renderFigureSvg } from "./svg.js";
export { main, parseCliArgs, renderToFile } from "./cli.js";
export type { CliOptions } from "./cli.js";
