"""Built-in accountability benchmark catalog.

56 criteria in a four-by-four matrix. Rows ("aspects") name the part of the
automated decision system a criterion concerns: Data, Model, Code, System.
Columns ("categories") name its lifecycle role: Development, Assessment,
Mitigation, Assurance. Codes are C<category><aspect><ordinal>, e.g. C345 is
the fifth Mitigation criterion for the System aspect.

Descriptions are short evaluator-facing summaries; detailed rubrics are out
of scope for this toolkit.
"""
from __future__ import annotations

BENCHMARK_ID = "sab-v1"
BENCHMARK_VERSION = "1.0.0"

ASPECTS = ("Data", "Model", "Code", "System")
CATEGORIES = ("Development", "Assessment", "Mitigation", "Assurance")

# (category, aspect) -> criteria in ordinal order, as (name, description)
CRITERIA: dict[tuple[str, str], tuple[tuple[str, str], ...]] = {
    ("Development", "Data"): (
        ("Data Dictionary",
         "Data dictionaries exist for training, validation, test, and any other "
         "datasets involved in developing or operating the system, covering field "
         "meanings, sources, formats, scales, and allowed values."),
        ("Datasheet, Collection Process",
         "Dataset documentation explains how the data was gathered, in enough "
         "detail that others could collect comparable data."),
        ("Datasheet, Composition",
         "Dataset documentation describes what the data contains: content and "
         "relationships, size, recommended splits, and any sensitive information."),
        ("Datasheet, Motivation",
         "Dataset documentation states the reasons the dataset was created."),
        ("Datasheet, Preprocessing",
         "Dataset documentation reports whether and how the data was cleaned, "
         "transformed, or labeled."),
    ),
    ("Development", "Model"): (
        ("Reproducibility, Model",
         "Mechanisms are in place that make model results reproducible."),
        ("Design Transparency, Model",
         "Decisions and actions taken while designing and developing the model "
         "are documented, so later issues can be traced to specific choices and "
         "responsible actors."),
        ("Documentation, Model",
         "Adequate documents describe the model itself."),
        ("Selection, Model",
         "Documents describe the model selection process, justify the chosen "
         "model, and explain why it fits the system's particular purpose."),
    ),
    ("Development", "Code"): (
        ("Reproducibility, Code",
         "Mechanisms are in place that make code results reproducible."),
        ("Design Transparency, Code",
         "Decisions and actions related to the code's design are documented and "
         "traceable."),
        ("Documentation, Code",
         "The codebase is well organized and well documented, describing each "
         "piece, the overall organization, and how the pieces relate."),
    ),
    ("Development", "System"): (
        ("Documentation, Development",
         "Documents describe the whole development lifecycle, from ideation and "
         "problem understanding through deployment and maintenance."),
        ("Plans, Maintenance",
         "Detailed, actionable plans exist for maintaining and updating the "
         "system, including responses to contextual change, real-world "
         "performance, and stakeholder feedback."),
    ),
    ("Assessment", "Data"): (
        ("Privacy, Data",
         "The data respects privacy regulations and best practices; personally "
         "identifiable information, or data from which it could be "
         "reconstructed, is absent unless regulation permits it."),
        ("Fairness, Data",
         "Training data is checked for bias; protected attributes and their "
         "proxies are excluded as predictors unless used specifically to avoid "
         "discrimination."),
        ("Quality, Labels",
         "Labels for individual data instances are accurate, verified, and of "
         "good quality."),
        ("Inspectability",
         "Infrastructure and tools make it easy to access and observe the "
         "datasets employed or generated during development and use."),
    ),
    ("Assessment", "Model"): (
        ("Interpretability",
         "Developers and other technical experts can obtain explanations from "
         "the model of how specific decisions are made."),
        ("Fairness, Model",
         "Model outputs are evaluated for discrimination against protected "
         "groups, using fairness measures appropriate to the context."),
        ("Testing, Adversarial",
         "The model is tested against deliberately crafted inputs, including "
         "data poisoning, that aim to make it fail."),
    ),
    ("Assessment", "Code"): (
        ("Privacy, Code",
         "The code keeps user data and other sensitive data confidential and "
         "does not allow leakage, including leakage via reverse engineering."),
        ("Security, Code",
         "The software is secure against malicious attacks that aim to steal "
         "information, manipulate behavior, or cause loss of availability."),
        ("Testing Cards",
         "Mechanisms and designs exist for testing the code as a whole and in "
         "parts, with records of test designs, results, and coverage."),
    ),
    ("Assessment", "System"): (
        ("Awareness, Public",
         "The public and decision subjects have appropriate knowledge of the "
         "system's existence, objectives, and mechanisms, including published "
         "accuracy and fairness results."),
        ("Risk, Humans",
         "Risks the deployed system poses to individual rights and freedoms are "
         "assessed; a system that violates human rights cannot satisfy this "
         "criterion."),
        ("Training, Operator",
         "System operators receive adequate training on the nature and "
         "limitations of the model."),
        ("Accuracy, System",
         "Accuracy metrics are appropriate, evaluation uses a suitable test "
         "set, and the achieved accuracy level is acceptable."),
    ),
    ("Mitigation", "Data"): (
        ("Anonymization",
         "Personally identifiable information is removed, aggregated, or "
         "otherwise anonymized as needed to comply with privacy regulations."),
        ("Security",
         "Data is transmitted and stored with secure communication techniques, "
         "in general and before anonymization or aggregation."),
    ),
    ("Mitigation", "Model"): (
        ("Adversarial, Training",
         "The model is trained on adversarial samples to improve robustness, "
         "especially where adversarial testing found weaknesses."),
        ("Explanations, Mitigation",
         "Supplementary explainability tools and techniques are used when the "
         "model lacks built-in explanation mechanisms."),
        ("Fairness, Mitigation",
         "Pre-processing, in-processing, or post-processing techniques are "
         "applied to keep model outcomes fair."),
        ("Privacy, Training",
         "Privacy-preserving training techniques, such as federated learning or "
         "differential privacy, are used where needed."),
    ),
    ("Mitigation", "Code"): (
        ("Review, Code",
         "Well-established code review practices are applied during "
         "development, with reviewers other than the code's authors."),
        ("Diversity, Team",
         "The development team represents diverse demographic groups."),
    ),
    ("Mitigation", "System"): (
        ("Monitoring, Fairness",
         "Infrastructure and mechanisms monitor the model's fairness metrics in "
         "real-world use."),
        ("Monitoring, Performance",
         "Infrastructure and mechanisms monitor the model's accuracy in "
         "real-world use."),
        ("Oversight, Human",
         "Policies and mechanisms keep humans able to oversee and overrule the "
         "system's decisions, with involvement growing with application risk; a "
         "fully unattended system fails this criterion."),
        ("Harms, Remedies",
         "Policies and mechanisms stand ready to provide remedies proportional "
         "to unintended or unexpected harms, even absent negligence or bad "
         "faith."),
        ("Mechanism, Feedback",
         "Effective channels collect feedback from stakeholders, including "
         "decision subjects, and operators respond constructively and "
         "communicate resulting changes."),
        ("Security",
         "System security tools and techniques are in place and effective "
         "against potential threats."),
    ),
    ("Assurance", "Data"): (
        ("Data Protection",
         "Data protection impact assessments are prepared and adequate with "
         "respect to relevant regulations and best practices."),
        ("Datasheet, Maintenance",
         "A dataset maintenance plan exists and supports future communication "
         "about the dataset."),
        ("Datasheet, Uses",
         "Documentation states the tasks the dataset can be used for and the "
         "tasks it should not be used for."),
    ),
    ("Assurance", "Model"): (
        ("Privacy, Model",
         "Appropriate privacy precautions apply to the model's architecture and "
         "behavior."),
        ("Uses, Model",
         "The model's actual real-world use aligns with its originally intended "
         "purpose."),
        ("Documentation, Capabilities",
         "Documents detail what the model can do, the conditions it needs, its "
         "intended users, and, explicitly, its limitations."),
        ("Explainability",
         "An ordinary human audience can understand how the model reaches its "
         "decisions, overall and case by case, well enough to make "
         "counterfactual claims about its behavior."),
    ),
    ("Assurance", "Code"): (
        ("Certification, Developer",
         "The system's engineers, designers, and testers hold the appropriate "
         "and necessary certificates."),
        ("Due Diligence",
         "Licensing, open-source clearance, and other ownership matters are "
         "clearly defined, agreed upon, and documented."),
    ),
    ("Assurance", "System"): (
        ("Record Keeping, Operational",
         "Logging infrastructure records inputs, outputs, and model files, plus "
         "usage details such as timestamps and operators, throughout "
         "development and use."),
        ("Uses, System",
         "The system's actual real-world use aligns with its originally "
         "intended purpose."),
        ("Documentation, Acceptability",
         "Documents elaborate and certify unambiguous, consistent, and "
         "comprehensive acceptance criteria, developed with key stakeholders."),
        ("Insurance",
         "The system is insured for liability, with adequate coverage."),
        ("Rating, Risk",
         "Independent risk agencies have assigned the system a risk rating, as "
         "tiered regulatory regimes expect."),
    ),
}
