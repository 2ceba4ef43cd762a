/* tslint:disable */
/* eslint-disable */

/**
 * Exit code and both output streams of one run.
 */
export class Run {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly code: number;
    readonly stderr: string;
    readonly stdout: string;
}

/**
 * Class flags and witnesses of a complete game.
 */
export function classify(text: string, machine: boolean): Run;

/**
 * Positive extendability, with an optional certificate, extreme games and
 * lower and upper games.
 */
export function positive(text: string, certificate: boolean, extremes: boolean, bounds: boolean, machine: boolean): Run;

/**
 * Symmetric convex extensions: extendability, bounds and extreme games.
 */
export function symconv(text: string, bounds: boolean, extremes: boolean, machine: boolean): Run;

/**
 * Game file of the partially symmetric game with `n` players whose known
 * sizes are given as `size:value` pairs, e.g. `2:2 4:8`.
 */
export function symmetric_game_file(n: number, sizes: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_run_free: (a: number, b: number) => void;
    readonly classify: (a: number, b: number, c: number) => number;
    readonly positive: (a: number, b: number, c: number, d: number, e: number, f: number) => number;
    readonly run_code: (a: number) => number;
    readonly run_stderr: (a: number) => [number, number];
    readonly run_stdout: (a: number) => [number, number];
    readonly symconv: (a: number, b: number, c: number, d: number, e: number) => number;
    readonly symmetric_game_file: (a: number, b: number, c: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __externref_table_dealloc: (a: number) => void;
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
