/**
 * Node bindings for the spikeinfo core.
 *
 * Every call shells out to the core's CLI and parses its JSON report, so
 * no numerical logic lives on this side and values are bit-for-bit the
 * core's own. Calls run in a child process off the event loop; all entry
 * points are async.
 *
 * The Python interpreter used to launch the core defaults to `python3`
 * and can be overridden with the SPIKEINFO_PYTHON environment variable.
 */

import { execFile } from 'node:child_process';
import { mkdtemp, readFile, rm, writeFile } from 'node:fs/promises';
import { tmpdir } from 'node:os';
import path from 'node:path';
import { promisify } from 'node:util';

const execFileAsync = promisify(execFile);

const PYTHON = process.env.SPIKEINFO_PYTHON ?? 'python3';

/** Estimates mirrored from the core's EstimatorResult. */
export interface BoundResult {
    value: number;
    method: string;
    n: number;
    m: number;
    occupied_bins: number;
    correction: number;
}

/** Permutation-test outcome mirrored from the core's TestReport. */
export interface BoundTestResult extends BoundResult {
    p_value: number;
    surrogate_count: number;
    scheme: string;
    null_values: number[];
}

/** A core validation failure, surfaced with the core's error tag intact. */
export class CoreError extends Error {
    readonly tag: string;
    readonly exitCode: number;

    constructor(tag: string, message: string, exitCode: number) {
        super(`${tag}: ${message}`);
        this.name = 'CoreError';
        this.tag = tag;
        this.exitCode = exitCode;
    }
}

interface Report {
    command: string;
    config: Record<string, unknown>;
    result: Record<string, unknown>;
    tool: { name: string; version: string };
}

async function runCli(args: string[], workdir: string): Promise<Report> {
    const reportPath = path.join(workdir, 'report.json');
    try {
        await execFileAsync(PYTHON, ['-m', 'spikeinfo', '--report', reportPath, ...args], {
            maxBuffer: 64 * 1024 * 1024,
        });
    } catch (err) {
        const failure = err as { code?: number; stderr?: string };
        const stderr = (failure.stderr ?? '').trim();
        const lastLine = stderr.split('\n').filter(Boolean).pop() ?? 'unknown core failure';
        const match = /^([A-Za-z]+): ?(.*)$/s.exec(lastLine);
        if (match) {
            throw new CoreError(match[1], match[2], failure.code ?? 1);
        }
        throw new CoreError('CoreFailure', lastLine, failure.code ?? 1);
    }
    return JSON.parse(await readFile(reportPath, 'utf8')) as Report;
}

async function withWorkdir<T>(fn: (dir: string) => Promise<T>): Promise<T> {
    const dir = await mkdtemp(path.join(tmpdir(), 'spikeinfo-'));
    try {
        return await fn(dir);
    } finally {
        await rm(dir, { recursive: true, force: true });
    }
}

async function writeSeries(dir: string, name: string, symbols: number[]): Promise<string> {
    const file = path.join(dir, name);
    await writeFile(file, 's\n' + symbols.map((s) => String(s)).join('\n') + '\n', 'utf8');
    return file;
}

function toBoundResult(result: Record<string, unknown>): BoundResult {
    return {
        value: result.value_bits as number,
        method: result.method as string,
        n: result.n as number,
        m: result.bins as number,
        occupied_bins: result.occupied_bins as number,
        correction: result.correction_bits as number,
    };
}

async function entropyWith(method: string, symbols: number[], bins: number): Promise<BoundResult> {
    return withWorkdir(async (dir) => {
        const input = await writeSeries(dir, 'series.csv', symbols);
        const report = await runCli(
            ['entropy', '--input', input, '--bins', String(bins), '--method', method],
            dir,
        );
        return toBoundResult(report.result);
    });
}

/** Plug-in entropy of integer symbols over the alphabet 0..bins-1, in bits. */
export function entropyMle(symbols: number[], bins: number): Promise<BoundResult> {
    return entropyWith('mle', symbols, bins);
}

/** Miller-Madow corrected entropy estimate. */
export function entropyMm(symbols: number[], bins: number): Promise<BoundResult> {
    return entropyWith('mm', symbols, bins);
}

/** Jackknife (leave-one-out) corrected entropy estimate. */
export function entropyJk(symbols: number[], bins: number): Promise<BoundResult> {
    return entropyWith('jk', symbols, bins);
}

/** Plug-in mutual information between two aligned symbol series, in bits. */
export function mutualInformation(x: number[], y: number[]): Promise<BoundResult> {
    return withWorkdir(async (dir) => {
        const fx = await writeSeries(dir, 'x.csv', x);
        const fy = await writeSeries(dir, 'y.csv', y);
        const report = await runCli(['mi', '--input-x', fx, '--input-y', fy], dir);
        return toBoundResult(report.result);
    });
}

/** Plug-in transfer entropy source -> target with history lengths k (target) and l (source). */
export function transferEntropy(
    source: number[],
    target: number[],
    k = 1,
    l = 1,
): Promise<BoundResult> {
    return withWorkdir(async (dir) => {
        const fs = await writeSeries(dir, 'source.csv', source);
        const ft = await writeSeries(dir, 'target.csv', target);
        const report = await runCli(
            ['te', '--source', fs, '--target', ft, '--k', String(k), '--l', String(l)],
            dir,
        );
        return toBoundResult(report.result);
    });
}

/** Source-shuffle permutation test of transfer entropy; deterministic in the seed. */
export function permutationTest(
    source: number[],
    target: number[],
    k: number,
    l: number,
    surrogates: number,
    seed: number,
): Promise<BoundTestResult> {
    return withWorkdir(async (dir) => {
        const fs = await writeSeries(dir, 'source.csv', source);
        const ft = await writeSeries(dir, 'target.csv', target);
        const report = await runCli(
            [
                'te',
                '--source', fs,
                '--target', ft,
                '--k', String(k),
                '--l', String(l),
                '--surrogates', String(surrogates),
                '--seed', String(seed),
            ],
            dir,
        );
        return {
            ...toBoundResult(report.result),
            p_value: report.result.p_value as number,
            surrogate_count: report.result.surrogate_count as number,
            scheme: report.result.scheme as string,
            null_values: report.result.null_values_bits as number[],
        };
    });
}

/** Homogeneous Poisson event times on [0, duration) at the given rate (Hz). */
export function simulatePoisson(rate: number, duration: number, seed: number): Promise<number[]> {
    return withWorkdir(async (dir) => {
        const out = path.join(dir, 'train.csv');
        await runCli(
            [
                'simulate', 'poisson',
                '--rate', String(rate),
                '--duration', String(duration),
                '--seed', String(seed),
                '--output', out,
            ],
            dir,
        );
        const lines = (await readFile(out, 'utf8')).trim().split('\n');
        return lines.slice(1).map(Number);
    });
}

/** Lag-coupled binary driver/follower pair used as transfer-entropy ground truth. */
export function coupledPair(
    coupling: number,
    lag: number,
    length: number,
    seed: number,
): Promise<{ x: number[]; y: number[] }> {
    return withWorkdir(async (dir) => {
        const fx = path.join(dir, 'x.csv');
        const fy = path.join(dir, 'y.csv');
        await runCli(
            [
                'simulate', 'coupled-pair',
                '--coupling', String(coupling),
                '--lag', String(lag),
                '--length', String(length),
                '--seed', String(seed),
                '--output-x', fx,
                '--output-y', fy,
            ],
            dir,
        );
        const parse = async (file: string) =>
            (await readFile(file, 'utf8')).trim().split('\n').slice(1).map(Number);
        return { x: await parse(fx), y: await parse(fy) };
    });
}
