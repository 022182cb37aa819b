import argparse
import json
import sys
from contextlib import contextmanager, nullcontext
from dataclasses import replace
from pathlib import Path
from typing import Callable, Iterator, Optional, TextIO

from classica.annotate.annotated_token import AnnotatedToken, Corpus
from classica.annotate.audit import audit_corpus
from classica.annotate.lemma_rules import apply_rules_to_corpus, default_rules, load_rules
from classica.annotate.projector import MorphProjector
from classica.commands.annotation_server import serve
from classica.commands.pipeline import AnnotationPipeline, ModelPaths
from classica.corpus.annotation_tsv import read_corpus, write_sentences
from classica.corpus.normalizer import NormalizationPolicy, normalize_chars
from classica.corpus.play import PlayMetadata, load_metadata
from classica.corpus.tei_parser import parse_play_file
from classica.corpus.token_file import read_token_file, write_token_file
from classica.corpus.tokenizer import Tokenizer, tokenize_play
from classica.evaluation import report_writer
from classica.evaluation.accuracy import accuracy_report
from classica.evaluation.confusion import confusion_matrix
from classica.evaluation.deltas import class_delta_report, delta_report
from classica.evaluation.grouped import grouped_report, parse_axes
from classica.evaluation.morph_features import morph_feature_report
from classica.evaluation.token_classes import Task, classify_tokens, parse_task
from classica.lexicon.lexicon import Lexicon, load_lexicon, load_name_list
from classica.models.lemmatizer import LemmatizerModel, train_lemmatizer
from classica.models.morph_classifiers import train_morph_aux
from classica.models.tagger import train_tagger
from classica.models.training_config import TrainingConfig
from classica.sampling.balance import BalanceConfig, validate_balance
from classica.sampling.splitter import sample_play, three_tier_split
from classica.utils import classica_logger, config_reader
from classica.utils.errors import ClassicaError, DataError, UsageError
from classica.utils.text_files import open_utf8, read_stdin


class ClassicaArgumentParser(argparse.ArgumentParser):
    """argparse that reports bad usage as UsageError instead of exiting."""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def sample_id(path: str | Path) -> str:
    """Play id of a sample file: its name up to the first dot."""
    return Path(path).name.split(".")[0]


@contextmanager
def _output(path: Optional[str]) -> Iterator[TextIO]:
    if path is None or path == "-":
        with nullcontext(sys.stdout) as out:
            yield out
        sys.stdout.flush()
        return
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='\n') as out:
        yield out


def _read_text(path: Optional[str]) -> str:
    if path is None or path == "-":
        return read_stdin()
    with open_utf8(path) as file:
        return file.read()


def _read_corpora(paths: list[str]) -> Corpus:
    corpus: Corpus = []
    for path in paths:
        corpus.extend(read_corpus(path))
    return corpus


def _load_lexicon(lexicon_path: Optional[str], names_path: Optional[str]) -> Optional[Lexicon]:
    if lexicon_path:
        return load_lexicon(lexicon_path, names_path=names_path)
    if names_path:
        return Lexicon([], load_name_list(names_path))
    return None


class CommandProcessor:
    def __init__(self) -> None:
        self.commands: dict[str, Callable[[argparse.Namespace], int]] = {
            "ingest": self.ingest,
            "sample": self.sample,
            "project": self.project,
            "normalize": self.normalize,
            "train-tagger": self.train_tagger,
            "train-lemmatizer": self.train_lemmatizer,
            "tag": self.tag,
            "lemmatize": self.lemmatize,
            "eval": self.evaluate,
            "confusions": self.confusions,
            "validate-balance": self.validate_balance,
            "serve": self.serve,
            "audit": self.audit,
        }
        self.parser = self._build_parser()

    def _build_parser(self) -> ClassicaArgumentParser:
        parser = ClassicaArgumentParser(prog="classica", description="Classical French corpus annotation toolkit")
        parser.add_argument("--config", help="configuration JSON (default: configs/classica_config.json or CLASSICA_CONFIG)")
        verbosity = parser.add_mutually_exclusive_group()
        verbosity.add_argument("--verbose", action="store_true", help="log debug messages")
        verbosity.add_argument("--quiet", action="store_true", help="log warnings and errors only")
        subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
        subparsers.required = True

        ingest = subparsers.add_parser("ingest", help="TEI plays to one-token-per-line files")
        ingest.add_argument("inputs", nargs="+", help="TEI XML files")
        ingest.add_argument("--out-dir", required=True)
        ingest.add_argument("--metadata", help="metadata CSV keyed by play id")
        ingest.add_argument("--no-ligatures", action="store_true", help="do not compose oe/ae ligatures")
        ingest.add_argument("--no-apostrophes", action="store_true", help="keep typographic apostrophes")

        sample = subparsers.add_parser("sample", help="cut token files into train/dev/test TSV tiers")
        sample.add_argument("inputs", nargs="+", help="token files from ingest")
        sample.add_argument("--out-dir", required=True)
        sample.add_argument("--metadata", help="metadata CSV; plays without a row are reported")
        sample.add_argument("--train-n", type=int)
        sample.add_argument("--dev-n", type=int)
        sample.add_argument("--test-n", type=int)

        project = subparsers.add_parser("project", help="fill the morph column from a lexicon")
        project.add_argument("--in", dest="input", required=True)
        project.add_argument("--out")
        project.add_argument("--lexicon", required=True)
        project.add_argument("--names")
        project.add_argument("--no-case-fallback", action="store_true")

        normalize = subparsers.add_parser("normalize", help="apply lemma normalization rules to a TSV corpus")
        normalize.add_argument("--in", dest="input", required=True)
        normalize.add_argument("--out")
        normalize.add_argument("--rules", help="rules TSV (default from the configuration)")
        normalize.add_argument("--chars", action="store_true", help="also normalize characters of forms and lemmas")

        train = subparsers.add_parser("train-tagger", help="train the POS tagger")
        train.add_argument("--train", nargs="+", required=True)
        train.add_argument("--dev", nargs="+")
        train.add_argument("--out", required=True)
        train.add_argument("--seed", type=int)
        train.add_argument("--epochs", type=int)
        train.add_argument("--patience", type=int)
        train.add_argument("--threshold", type=float)
        train.add_argument("--restarts", type=int)
        train.add_argument("--aux", action="store_true", help="also train the morph field classifiers")
        train.add_argument("--history", help="CSV file for the per-epoch accuracy series")

        train_lemma = subparsers.add_parser("train-lemmatizer", help="train the suffix lemmatizer")
        train_lemma.add_argument("--train", nargs="+", required=True)
        train_lemma.add_argument("--out", required=True)
        train_lemma.add_argument("--lexicon")
        train_lemma.add_argument("--names")
        train_lemma.add_argument("--suffix-max", type=int)

        tag = subparsers.add_parser("tag", help="annotate raw text, one sentence per line")
        tag.add_argument("--in", dest="input", help="UTF-8 text file (default stdin)")
        tag.add_argument("--out")
        self._add_model_arguments(tag)

        lemmatize = subparsers.add_parser("lemmatize", help="fill the lemma column of a POS-tagged TSV")
        lemmatize.add_argument("--in", dest="input", required=True)
        lemmatize.add_argument("--out")
        lemmatize.add_argument("--model", required=True, help="lemmatizer model")
        lemmatize.add_argument("--lexicon")
        lemmatize.add_argument("--names")
        lemmatize.add_argument("--rules", help="apply lemma rules after lemmatizing")

        evaluate = subparsers.add_parser("eval", help="accuracy report of predictions against gold")
        self._add_eval_arguments(evaluate)
        evaluate.add_argument("--train", nargs="+", required=True, help="training TSVs that define token classes")
        evaluate.add_argument("--compare", nargs="+", help="predictions of a second system, reported as deltas")
        evaluate.add_argument("--metadata")
        evaluate.add_argument("--group", default="century,channel")
        evaluate.add_argument("--confusions", type=int, metavar="K")
        evaluate.add_argument("--format", choices=("text", "jsonl"), default="text")

        confusions = subparsers.add_parser("confusions", help="most frequent prediction errors")
        self._add_eval_arguments(confusions)
        confusions.add_argument("--top-k", type=int, default=10)
        confusions.add_argument("--format", choices=("text", "jsonl"), default="text")

        balance = subparsers.add_parser("validate-balance", help="check out-of-domain samples against the balance rules")
        balance.add_argument("inputs", nargs="+", help="token files or TSV samples named after their play id")
        balance.add_argument("--metadata", required=True)
        balance.add_argument("--tau-gender", type=float)
        balance.add_argument("--tau-size", type=float)
        balance.add_argument("--tau-genre", type=float)

        server = subparsers.add_parser("serve", help="HTTP annotation service")
        server.add_argument("--host")
        server.add_argument("--port", type=int)
        self._add_model_arguments(server)

        audit = subparsers.add_parser("audit", help="summary counts of a TSV corpus")
        audit.add_argument("inputs", nargs="+")
        audit.add_argument("--top-k", type=int, default=20)
        audit.add_argument("--out")
        return parser

    @staticmethod
    def _add_model_arguments(parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--models-dir", help="directory holding the model files (default CLASSICA_MODELS)")
        parser.add_argument("--model", help="tagger model")
        parser.add_argument("--lemmatizer", help="lemmatizer model")
        parser.add_argument("--lexicon")
        parser.add_argument("--names")
        parser.add_argument("--rules")

    @staticmethod
    def _add_eval_arguments(parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--task", required=True, help="lemma, pos or morph")
        parser.add_argument("--gold", nargs="+", required=True)
        parser.add_argument("--pred", nargs="+", required=True)
        parser.add_argument("--out")

    def dispatch(self, argv: list[str]) -> int:
        try:
            args = self.parser.parse_args(argv)
        except UsageError as e:
            sys.stderr.write(self.parser.format_usage())
            classica_logger.error(f"CLI {e}")
            return e.exit_status
        except SystemExit as e:
            # --help
            return int(e.code or 0)

        func = self.commands[args.command]
        try:
            if args.config:
                config_reader.reload_config(args.config)
            if args.verbose:
                classica_logger.set_level("DEBUG")
            elif args.quiet:
                classica_logger.set_level("WARNING")
            return func(args)
        except ClassicaError as e:
            classica_logger.error(f"CLI {args.command} failed: {e}")
            return e.exit_status
        except (OSError, UnicodeDecodeError) as e:
            classica_logger.error(f"CLI {args.command} failed: {e}")
            return DataError.exit_status

    def ingest(self, args: argparse.Namespace) -> int:
        metadata = load_metadata(args.metadata) if args.metadata else {}
        policy = NormalizationPolicy.from_config()
        if args.no_ligatures:
            policy = replace(policy, compose_ligatures=False)
        if args.no_apostrophes:
            policy = replace(policy, unify_apostrophes=False)
        tokenizer = Tokenizer.from_config()
        out_dir = Path(args.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)

        for path in args.inputs:
            play = parse_play_file(path, metadata.get(Path(path).stem))
            segments = tokenize_play(play, tokenizer, policy)
            token_count = sum(len(segment) for segment in segments)
            write_token_file(segments, out_dir / f"{play.id}.tokens.txt")
            classica_logger.info(f"INGEST {play.id}: {len(play.speeches)} speeches, {token_count} tokens")
        return 0

    def sample(self, args: argparse.Namespace) -> int:
        metadata = load_metadata(args.metadata) if args.metadata else None
        section = config_reader.get_section("sampling")
        train_n = args.train_n if args.train_n is not None else section.get("train_n", 2000)
        dev_n = args.dev_n if args.dev_n is not None else section.get("dev_n", 100)
        test_n = args.test_n if args.test_n is not None else section.get("test_n", 100)
        out_dir = Path(args.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)

        for path in args.inputs:
            play_id = sample_id(path)
            if metadata is not None and play_id not in metadata:
                classica_logger.warning(f"SAMPLING Play {play_id} has no metadata row")
            segments = read_token_file(path, play_id)
            token_count = sum(len(segment) for segment in segments)
            split = three_tier_split(token_count, train_n, dev_n, test_n, play_id)
            for tier, tier_segments in sample_play(segments, split).items():
                sentences = [[AnnotatedToken(token.text) for token in segment] for segment in tier_segments]
                with _output(str(out_dir / f"{play_id}.{tier}.tsv")) as out:
                    write_sentences(sentences, out)
            classica_logger.info(f"SAMPLING {play_id}: {token_count} tokens split {train_n}/{dev_n}/{test_n}")
        return 0

    def project(self, args: argparse.Namespace) -> int:
        lexicon = load_lexicon(args.lexicon, names_path=args.names)
        case_fallback = False if args.no_case_fallback else config_reader.get("annotation", "case_fallback", True)
        projector = MorphProjector(lexicon, case_fallback=case_fallback)
        corpus = [projector.project(sentence) for sentence in read_corpus(args.input)]
        with _output(args.out) as out:
            write_sentences(corpus, out)
        counters = ", ".join(f"{key} {value}" for key, value in projector.counters.as_dict().items())
        classica_logger.info(f"PROJECTOR {counters}")
        return 0

    def normalize(self, args: argparse.Namespace) -> int:
        rules = load_rules(args.rules) if args.rules else list(default_rules())
        corpus = read_corpus(args.input)
        if args.chars:
            corpus = [
                [
                    replace(
                        token,
                        form=normalize_chars(token.form),
                        lemma=None if token.lemma is None else normalize_chars(token.lemma),
                    )
                    for token in sentence
                ]
                for sentence in corpus
            ]
        corpus, changed = apply_rules_to_corpus(corpus, rules)
        with _output(args.out) as out:
            write_sentences(corpus, out)
        classica_logger.info(f"RULES {changed} lemmas rewritten by {len(rules)} rules")
        return 0

    def train_tagger(self, args: argparse.Namespace) -> int:
        config = TrainingConfig.from_config(
            seed=args.seed,
            epochs=args.epochs,
            patience=args.patience,
            threshold=args.threshold,
            restarts=args.restarts,
        )
        train = _read_corpora(args.train)
        dev = _read_corpora(args.dev) if args.dev else None
        model = train_tagger(train, dev, config, args.history)
        if args.aux:
            model = model.with_aux(train_morph_aux(train, config))
        model.save(args.out)
        classica_logger.info(f"TAGGER Model written to {args.out}")
        return 0

    def train_lemmatizer(self, args: argparse.Namespace) -> int:
        suffix_max = args.suffix_max if args.suffix_max is not None else TrainingConfig.from_config().suffix_max
        lexicon = _load_lexicon(args.lexicon, args.names)
        model = train_lemmatizer(_read_corpora(args.train), lexicon, suffix_max)
        model.save(args.out)
        classica_logger.info(f"LEMMATIZER Model written to {args.out}")
        return 0

    @staticmethod
    def _pipeline(args: argparse.Namespace) -> AnnotationPipeline:
        paths = ModelPaths.resolve(args.models_dir, args.model, args.lemmatizer, args.lexicon, args.names, args.rules)
        return AnnotationPipeline.from_paths(paths)

    def tag(self, args: argparse.Namespace) -> int:
        pipeline = self._pipeline(args)
        text = _read_text(args.input)
        with _output(args.out) as out:
            out.write(pipeline.render(text))
        return 0

    def lemmatize(self, args: argparse.Namespace) -> int:
        model = LemmatizerModel.load(args.model, _load_lexicon(args.lexicon, args.names))
        corpus = read_corpus(args.input)
        missing = sum(1 for sentence in corpus for token in sentence if token.pos is None)
        if missing:
            raise DataError(f"{missing} tokens of {args.input} have no POS tag to lemmatize with")
        corpus = [[token.with_lemma(model.lemmatize(token.form, token.pos)) for token in sentence] for sentence in corpus]
        if args.rules:
            corpus, changed = apply_rules_to_corpus(corpus, load_rules(args.rules))
            classica_logger.info(f"RULES {changed} lemmas rewritten")
        with _output(args.out) as out:
            write_sentences(corpus, out)
        return 0

    @staticmethod
    def _paired_samples(gold_paths: list[str], pred_paths: list[str], flag: str = "--pred") -> list[tuple[str, Corpus, Corpus]]:
        if len(gold_paths) != len(pred_paths):
            raise UsageError(f"--gold lists {len(gold_paths)} files but {flag} lists {len(pred_paths)}")
        return [(sample_id(gold), read_corpus(gold), read_corpus(pred)) for gold, pred in zip(gold_paths, pred_paths)]

    def evaluate(self, args: argparse.Namespace) -> int:
        task = parse_task(args.task)
        axes = parse_axes(args.group)
        samples = self._paired_samples(args.gold, args.pred)
        gold = [sentence for _, corpus, _ in samples for sentence in corpus]
        pred = [sentence for _, _, corpus in samples for sentence in corpus]
        classes = classify_tokens(_read_corpora(args.train), gold, task)
        report = accuracy_report(gold, pred, classes, task)
        metadata: Optional[dict[str, PlayMetadata]] = load_metadata(args.metadata) if args.metadata else None
        grouped = grouped_report(samples, metadata, task, axes) if metadata is not None else None

        compare = None
        if args.compare:
            compare_samples = self._paired_samples(args.gold, args.compare, "--compare")
            compare_pred = [sentence for _, _, corpus in compare_samples for sentence in corpus]
            compare = (
                accuracy_report(gold, compare_pred, classes, task),
                grouped_report(compare_samples, metadata, task, axes) if metadata is not None else None,
            )
        confusions = confusion_matrix(gold, pred, task, args.confusions) if args.confusions else None
        features = morph_feature_report(gold, pred) if task == Task.MORPH else None

        with _output(args.out) as out:
            if args.format == "jsonl":
                report_writer.write_jsonl(report_writer.eval_records(report), out)
                if grouped is not None:
                    report_writer.write_jsonl(report_writer.grouped_records(grouped), out)
                if compare is not None and compare[1] is not None and grouped is not None:
                    report_writer.write_jsonl(
                        report_writer.delta_records(delta_report(grouped, compare[1]), axes[0], axes[1] if len(axes) == 2 else "group"),
                        out,
                    )
                if confusions is not None:
                    report_writer.write_jsonl(report_writer.confusion_records(confusions), out)
            else:
                out.write(report_writer.render_eval_report(report))
                if features is not None:
                    out.write("\n" + report_writer.render_feature_scores(features))
                if grouped is not None:
                    out.write("\n" + report_writer.render_grouped_report(grouped))
                if compare is not None:
                    out.write("\n" + report_writer.render_class_deltas(class_delta_report(report, compare[0])))
                    if grouped is not None and compare[1] is not None:
                        out.write("\n" + report_writer.render_delta_report(delta_report(grouped, compare[1]), axes[0]))
                if confusions is not None:
                    out.write("\n" + report_writer.render_confusions(confusions))
        return 0

    def confusions(self, args: argparse.Namespace) -> int:
        task = parse_task(args.task)
        samples = self._paired_samples(args.gold, args.pred)
        gold = [sentence for _, corpus, _ in samples for sentence in corpus]
        pred = [sentence for _, _, corpus in samples for sentence in corpus]
        entries = confusion_matrix(gold, pred, task, args.top_k)
        with _output(args.out) as out:
            if args.format == "jsonl":
                report_writer.write_jsonl(report_writer.confusion_records(entries), out)
            else:
                out.write(report_writer.render_confusions(entries))
        return 0

    def validate_balance(self, args: argparse.Namespace) -> int:
        metadata = load_metadata(args.metadata)
        samples = []
        for path in args.inputs:
            play_id = sample_id(path)
            if play_id not in metadata:
                raise DataError(f"Sample {path} has no metadata row for {play_id!r}")
            if str(path).endswith(".tsv"):
                token_count = sum(len(sentence) for sentence in read_corpus(path))
            else:
                token_count = sum(len(segment) for segment in read_token_file(path, play_id))
            samples.append((metadata[play_id], token_count))

        config = BalanceConfig.from_config(tau_gender=args.tau_gender, tau_size=args.tau_size, tau_genre=args.tau_genre)
        report = validate_balance(samples, config)
        if not report.ok:
            classica_logger.error(f"SAMPLING {len(report.violations)} balance violations")
            return DataError.exit_status
        classica_logger.info(f"SAMPLING {len(samples)} samples satisfy the balance rules")
        return 0

    def serve(self, args: argparse.Namespace) -> int:
        serve(self._pipeline(args), args.host, args.port)
        return 0

    def audit(self, args: argparse.Namespace) -> int:
        audit = audit_corpus(_read_corpora(args.inputs))
        with _output(args.out) as out:
            out.write(json.dumps(audit.as_dict(args.top_k), ensure_ascii=False, indent=2) + "\n")
        return 0


def dispatch(argv: list[str]) -> int:
    return CommandProcessor().dispatch(argv)
