/* tslint:disable */
/* eslint-disable */

/**
 * Evaluates `expr` in mode `sup` or `inf`.
 */
export function evaluate(expr: string, mode: string): string;

/**
 * Both results side by side: `sup-result,inf-result`.
 */
export function evaluate_both(expr: string): string;

/**
 * Infimal convolution of two `x,value` tables.
 */
export function infconv(f1: string, f2: string): string;

/**
 * CSV of `x ↦ inf{w·z | z ∈ f(x)}` for the example set-valued function on
 * the grid `lo:hi:step`, followed by a `# proper` or `# improper` line.
 */
export function scalarize(w1: string, w2: string, grid: string): string;

export function tables(): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly evaluate: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly evaluate_both: (a: number, b: number) => [number, number, number, number];
    readonly infconv: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly scalarize: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly tables: () => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
